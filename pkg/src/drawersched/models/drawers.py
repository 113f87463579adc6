"""Drawer predicates and drawer configurations (composite priority rules)."""

from __future__ import annotations

from collections.abc import Callable, Iterator
from dataclasses import dataclass, fields
from typing import Final

from ..exceptions import DrawerConfigError
from .enums import CompareOp


@dataclass(frozen=True, slots=True)
class Comparison:
    """Numeric atom ``attribute <op> value``."""

    op: CompareOp
    value: int

    def __call__(self, attribute: int) -> bool:
        return self.op.apply(attribute, self.value)

    def __str__(self) -> str:
        return f"{self.op.value}{self.value}"


@dataclass(frozen=True, slots=True)
class CandidateAttributes:
    """What a predicate may look at for one candidate activity."""

    total_slack: int
    in_latest_project: bool
    duration: int
    total_demand: int


@dataclass(frozen=True, slots=True)
class DrawerPredicate:
    """Conjunction of optional atoms; the all-absent predicate is the catch-all."""

    slack_is_zero: bool | None = None
    in_latest_project: bool | None = None
    total_slack: Comparison | None = None
    duration: Comparison | None = None
    total_demand: Comparison | None = None

    @property
    def is_catch_all(self) -> bool:
        return all(getattr(self, f.name) is None for f in fields(self))

    def matches(self, attrs: CandidateAttributes) -> bool:
        """Evaluate every present atom against ``attrs``."""
        if self.slack_is_zero is not None and (attrs.total_slack == 0) != self.slack_is_zero:
            return False
        if self.in_latest_project is not None and attrs.in_latest_project != self.in_latest_project:
            return False
        if self.total_slack is not None and not self.total_slack(attrs.total_slack):
            return False
        if self.duration is not None and not self.duration(attrs.duration):
            return False
        if self.total_demand is not None and not self.total_demand(attrs.total_demand):
            return False
        return True

    def describe(self) -> str:
        """Short human-readable form, e.g. ``zero_slack latest``."""
        if self.is_catch_all:
            return "*"
        atoms: list[str] = []
        if self.slack_is_zero is not None:
            atoms.append("zero_slack" if self.slack_is_zero else "!zero_slack")
        if self.in_latest_project is not None:
            atoms.append("latest" if self.in_latest_project else "!latest")
        if self.total_slack is not None:
            atoms.append(f"slack{self.total_slack}")
        if self.duration is not None:
            atoms.append(f"duration{self.duration}")
        if self.total_demand is not None:
            atoms.append(f"demand{self.total_demand}")
        return " ".join(atoms)


CATCH_ALL: Final = DrawerPredicate()


@dataclass(frozen=True, slots=True)
class DrawerConfig:
    """Ordered drawers; candidates go to the first drawer they satisfy."""

    drawers: tuple[DrawerPredicate, ...]
    name: str = "custom"

    def __post_init__(self) -> None:
        if not self.drawers:
            raise ValueError("DrawerConfig needs at least one drawer")

    @property
    def is_exhaustive(self) -> bool:
        """Last drawer is a catch-all, so classification never fails."""
        return self.drawers[-1].is_catch_all

    def __len__(self) -> int:
        return len(self.drawers)

    def __iter__(self) -> Iterator[DrawerPredicate]:
        return iter(self.drawers)


def default_drawer_config() -> DrawerConfig:
    """Four drawers: critical in the latest project, critical elsewhere, latest project, the rest."""
    return DrawerConfig(
        drawers=(
            DrawerPredicate(slack_is_zero=True, in_latest_project=True),
            DrawerPredicate(slack_is_zero=True, in_latest_project=False),
            DrawerPredicate(slack_is_zero=False, in_latest_project=True),
            CATCH_ALL,
        ),
        name="four-drawer",
    )


def _critical_first() -> DrawerConfig:
    return DrawerConfig((DrawerPredicate(slack_is_zero=True), CATCH_ALL), name="critical-first")


def _latest_project_first() -> DrawerConfig:
    return DrawerConfig((DrawerPredicate(in_latest_project=True), CATCH_ALL), name="latest-project-first")


def _random_priority() -> DrawerConfig:
    return DrawerConfig((CATCH_ALL,), name="random")


PRESETS: Final[dict[str, Callable[[], DrawerConfig]]] = {
    "four-drawer": default_drawer_config,
    "critical-first": _critical_first,
    "latest-project-first": _latest_project_first,
    "random": _random_priority,
}


def drawer_config_preset(name: str) -> DrawerConfig:
    """Return a built-in configuration by name.

    Raises:
        DrawerConfigError: If the preset is unknown
    """
    try:
        return PRESETS[name]()
    except KeyError:
        raise DrawerConfigError(f"Unknown drawer preset {name!r} (known: {', '.join(PRESETS)})") from None
