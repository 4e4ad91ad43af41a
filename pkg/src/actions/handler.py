import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Callable, Dict, Optional

from ..config import RunConfig
from ..core.carpet import CarpetProfile, CarpetSpec, TriState

logger = logging.getLogger(__name__)


class Requirement(str, Enum):
    NONE = "none"
    TOTALLY_DISCONNECTED = "M_t"
    DOUBLING_CLASS = "M_tvd"


@dataclass(frozen=True)
class ClassFlags:
    in_t: TriState
    in_tv: TriState
    in_tvd: TriState


@dataclass
class CompareContext:
    specE: CarpetSpec
    specF: CarpetSpec
    profE: CarpetProfile
    profF: CarpetProfile
    flagsE: ClassFlags
    flagsF: ClassFlags
    config: RunConfig
    shared: Dict[str, Any] = field(default_factory=dict)

    @property
    def same_shape(self) -> bool:
        return (self.specE.n, self.specE.m) == (self.specF.n, self.specF.m)


@dataclass
class InvariantEntry:
    name: str
    applicable: bool
    differs: Optional[bool] = None
    result: Any = None
    certificate: str = ""
    conditional: bool = False
    reason: Optional[str] = None

    @property
    def is_witness(self) -> bool:
        return self.applicable and not self.conditional and self.differs is True


@dataclass
class InvariantCheck:
    name: str
    handler: Callable[[CompareContext], InvariantEntry]
    requirement: Requirement = Requirement.NONE
    same_shape_only: bool = True


def _membership(flags: ClassFlags, requirement: Requirement) -> TriState:
    if requirement is Requirement.TOTALLY_DISCONNECTED:
        return flags.in_t
    if requirement is Requirement.DOUBLING_CLASS:
        return flags.in_tvd
    return TriState.YES


class InvariantRegistry:
    """Named invariant checks run against a pair of carpets"""

    def __init__(self):
        self.checks: Dict[str, InvariantCheck] = {}

    def register_check(self, name: str, handler: Callable, requirement: Requirement = Requirement.NONE,
                       same_shape_only: bool = True):
        """Register a new invariant check; registration order is run order"""
        self.checks[name] = InvariantCheck(name, handler, requirement, same_shape_only)
        logger.debug(f"Registered invariant check: {name}")

    def gate(self, check: InvariantCheck, context: CompareContext) -> Optional[InvariantEntry]:
        """Return an inapplicable entry when the check's hypotheses fail"""
        if check.same_shape_only and not context.same_shape:
            return InvariantEntry(check.name, applicable=False, reason="expansion pairs differ")

        for label, flags in (("E", context.flagsE), ("F", context.flagsF)):
            if _membership(flags, check.requirement) is TriState.NO:
                return InvariantEntry(
                    check.name,
                    applicable=False,
                    reason=f"carpet {label} is not in {check.requirement.value}",
                )
        return None

    def run_check(self, name: str, context: CompareContext) -> InvariantEntry:
        """Run one check; failures become inapplicable entries"""
        try:
            if name not in self.checks:
                raise ValueError(f"Unknown invariant: {name}")

            check = self.checks[name]
            gated = self.gate(check, context)
            if gated is not None:
                return gated

            entry = check.handler(context)
            memberships = {_membership(flags, check.requirement) for flags in (context.flagsE, context.flagsF)}
            if entry.applicable and TriState.UNKNOWN in memberships:
                entry.conditional = True
                entry.reason = f"{check.requirement.value} membership not certified"
            return entry

        except Exception as e:
            logger.error(f"Invariant check {name} failed: {str(e)}")
            return InvariantEntry(name, applicable=False, reason=f"check failed: {e}")
