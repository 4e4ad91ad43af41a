from .carpet import (
    CarpetProfile,
    CarpetSpec,
    SigmaClass,
    SigmaKind,
    TriState,
    ell,
    is_doubling,
    is_regular,
    parse_spec,
    profile,
    sigma_classify,
    total_disconnectedness,
)
