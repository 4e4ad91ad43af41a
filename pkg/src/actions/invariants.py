"""The Lipschitz invariants compared by the battery, in run order"""
from collections import Counter
import logging

from ..core.carpet import CarpetProfile, TriState, is_doubling, is_regular, total_disconnectedness
from ..spectrum.equality import Verdict, compare_dimensions, spectra_equal
from .handler import ClassFlags, CompareContext, InvariantEntry, InvariantRegistry, Requirement

logger = logging.getLogger(__name__)


def class_membership(prof: CarpetProfile) -> ClassFlags:
    in_t = total_disconnectedness(prof)

    if not prof.has_vacant_row or in_t is TriState.NO:
        in_tv = TriState.NO
    else:
        in_tv = in_t

    if in_tv is TriState.NO or not is_doubling(prof):
        in_tvd = TriState.NO
    else:
        in_tvd = in_tv

    return ClassFlags(in_t=in_t, in_tv=in_tv, in_tvd=in_tvd)


def permutation_equal(profE: CarpetProfile, profF: CarpetProfile) -> bool:
    """Distribution sequences agree as multisets, zeros included"""
    if profE.m != profF.m:
        raise ValueError("permutation_equal needs a common vertical expansion")
    return Counter(profE.a) == Counter(profF.a)


def _parity(name: str, left: bool, right: bool) -> InvariantEntry:
    return InvariantEntry(
        name,
        applicable=True,
        differs=left != right,
        result={"E": left, "F": right},
        certificate="exact",
    )


def check_vacant_rows(context: CompareContext) -> InvariantEntry:
    return _parity("vacant_rows", context.profE.has_vacant_row, context.profF.has_vacant_row)


def check_doubling(context: CompareContext) -> InvariantEntry:
    return _parity("doubling", is_doubling(context.profE), is_doubling(context.profF))


def check_spectrum(context: CompareContext) -> InvariantEntry:
    verdict = spectra_equal(context.profE, context.profF, context.config.precision_bits)
    context.shared["spectra"] = verdict
    return InvariantEntry(
        "spectrum",
        applicable=True,
        differs=verdict.value is Verdict.NOT_EQUAL,
        result=verdict.value,
        certificate=verdict.certificate,
    )


def check_dimensions(context: CompareContext) -> InvariantEntry:
    verdicts = compare_dimensions(
        context.profE, context.profF, context.config.precision_bits, context.shared.get("spectra")
    )
    return InvariantEntry(
        "dimensions",
        applicable=True,
        differs=any(v.value is Verdict.NOT_EQUAL for v in verdicts.values()),
        result={name: v.value for name, v in verdicts.items()},
        certificate="; ".join(f"{name}: {v.certificate}" for name, v in sorted(verdicts.items())),
    )


def check_permutation(context: CompareContext) -> InvariantEntry:
    if context.profE.sigma_class.is_rational:
        return InvariantEntry("permutation", applicable=False, reason="log m / log n is rational")
    same = permutation_equal(context.profE, context.profF)
    return InvariantEntry(
        "permutation",
        applicable=True,
        differs=not same,
        result={"E": list(context.profE.a), "F": list(context.profF.a)},
        certificate="exact multiset comparison",
    )


def check_regularity(context: CompareContext) -> InvariantEntry:
    return _parity("regularity", is_regular(context.profE), is_regular(context.profF))


def default_registry() -> InvariantRegistry:
    registry = InvariantRegistry()
    registry.register_check("vacant_rows", check_vacant_rows, Requirement.TOTALLY_DISCONNECTED)
    registry.register_check("doubling", check_doubling, Requirement.TOTALLY_DISCONNECTED)
    registry.register_check("spectrum", check_spectrum, Requirement.TOTALLY_DISCONNECTED)
    registry.register_check("dimensions", check_dimensions, same_shape_only=False)
    registry.register_check("permutation", check_permutation, Requirement.DOUBLING_CLASS)
    registry.register_check("regularity", check_regularity)
    return registry
