"""Single-carpet analysis and the pairwise invariant battery"""
from dataclasses import dataclass, field
from enum import Enum
from itertools import count
from typing import Dict, List, Optional
import logging

from .actions.handler import ClassFlags, CompareContext, InvariantEntry
from .actions.invariants import class_membership, default_registry
from .config import RunConfig
from .core.carpet import (
    CarpetSpec,
    ell,
    is_doubling,
    is_regular,
    profile,
    total_disconnectedness,
)
from .errors import ShapeMismatch
from .flow.coordinator import FlowCoordinator
from .spectrum.beta import alpha_range, endpoint_values
from .spectrum.dimensions import dim_assouad, dim_box, dim_hausdorff
from .tools.io_tools import to_jsonable

logger = logging.getLogger(__name__)


class ReportVerdict(str, Enum):
    NOT_EQUIVALENT = "NotEquivalent"
    INCONCLUSIVE = "Inconclusive"


@dataclass
class InvariantReport:
    entries: List[InvariantEntry]
    verdict: ReportVerdict
    witness: Optional[str]
    class_flags: Dict[str, ClassFlags]
    same_shape: bool
    steps_completed: List[str] = field(default_factory=list)

    def entry(self, name: str) -> InvariantEntry:
        for entry in self.entries:
            if entry.name == name:
                return entry
        raise KeyError(name)

    def to_dict(self, precision_bits: int) -> Dict:
        return {
            "verdict": self.verdict.value,
            "witness": self.witness,
            "same_shape": self.same_shape,
            "class_flags": to_jsonable(self.class_flags, precision_bits),
            "steps_completed": list(self.steps_completed),
            "invariants": [to_jsonable(entry, precision_bits) for entry in self.entries],
        }


class InvariantPipeline:
    def __init__(self, config: Optional[RunConfig] = None):
        self.config = config or RunConfig()
        self.coordinator = FlowCoordinator()
        self.registry = default_registry()
        self._flow_ids = count(1)

    def analyze(self, spec: CarpetSpec) -> Dict:
        """Single-carpet report: profile, classes, dimensions and alpha range"""
        bits = self.config.precision_bits
        prof = profile(spec)
        flags = class_membership(prof)
        alpha_min, alpha_max = alpha_range(prof, bits)
        h_min, h_max = endpoint_values(prof, bits)

        return {
            "carpet": spec,
            "profile": {
                "a": list(prof.a),
                "N": prof.N,
                "E_rows": list(prof.E_rows),
                "s": prof.s,
                "a_star": list(prof.a_star),
                "M": list(prof.M),
                "has_vacant_row": prof.has_vacant_row,
                "sigma_class": prof.sigma_class,
                "ell": [ell(k, spec) for k in range(1, self.config.max_rank + 1)],
            },
            "class_flags": flags,
            "doubling": is_doubling(prof),
            "regular": is_regular(prof),
            "totally_disconnected": total_disconnectedness(prof),
            "dimensions": {
                "box": dim_box(prof, bits),
                "hausdorff": dim_hausdorff(prof, bits),
                "assouad": dim_assouad(prof, bits),
            },
            "alpha_range": {"alpha_min": alpha_min, "alpha_max": alpha_max},
            "spectrum_endpoints": {"h_alpha_min": h_min, "h_alpha_max": h_max, "extrapolated": True},
        }

    def compare(self, specE: CarpetSpec, specF: CarpetSpec) -> InvariantReport:
        """Run every registered invariant in order and pick the first sound witness"""
        if not isinstance(specE, CarpetSpec) or not isinstance(specF, CarpetSpec):
            raise ShapeMismatch("compare needs two carpet specifications")

        flow_id = f"compare-{next(self._flow_ids)}"
        self.coordinator.start_flow(flow_id, f"K({specE.n},{specE.m}) vs K({specF.n},{specF.m})")

        profE, profF = profile(specE), profile(specF)
        context = CompareContext(
            specE=specE,
            specF=specF,
            profE=profE,
            profF=profF,
            flagsE=class_membership(profE),
            flagsF=class_membership(profF),
            config=self.config,
        )

        entries = []
        for name in self.registry.checks:
            self.coordinator.begin_step(flow_id, name)
            entry = self.registry.run_check(name, context)
            entries.append(entry)
            status = "differs" if entry.differs else "agrees"
            self.coordinator.update_flow(flow_id, status if entry.applicable else "skipped", name)

        witness = next((entry.name for entry in entries if entry.is_witness), None)
        verdict = ReportVerdict.NOT_EQUIVALENT if witness else ReportVerdict.INCONCLUSIVE
        flow = self.coordinator.finish_flow(flow_id, verdict.value)
        logger.info(f"Battery verdict: {verdict.value}" + (f" (witness: {witness})" if witness else ""))

        return InvariantReport(
            entries=entries,
            verdict=verdict,
            witness=witness,
            class_flags={"E": context.flagsE, "F": context.flagsF},
            same_shape=context.same_shape,
            steps_completed=flow.get("steps_completed", []),
        )


def compare(specE: CarpetSpec, specF: CarpetSpec, config: Optional[RunConfig] = None) -> InvariantReport:
    return InvariantPipeline(config).compare(specE, specF)
