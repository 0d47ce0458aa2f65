# -*- mode: python -*-
# vi: set ft=python :

# Copyright (C) 2026 The dvrcert Authors.
# This file is part of dvrcert.
#
# dvrcert is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published
# by the Free Software Foundation, either version 3 of the License,
# or (at your option) any later version.
#
# dvrcert is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with this program.  If not, see <https://www.gnu.org/licenses/>.

"""Suite configuration files.

A configuration is a flat mapping read from JSON5, TOML or YAML. Files may
pull in others through an `includes` list and a sibling `<file>.d`
directory; included values override the including file.
"""

from __future__ import annotations

import dataclasses
import enum
import tomllib
from collections.abc import Mapping
from dataclasses import dataclass
from pathlib import Path
from typing import Any, TextIO

import json5 as json
import yaml
from beartype import beartype

from dvrcert.algebra.base_ring import (
    BaseRingConfig,
    BaseRingMode,
    ResidueFieldKind,
)
from dvrcert.algebra.construction import (
    ConstructionParams,
    ZSeriesTable,
    build_params,
    minimal_exponents,
    ones_coefficients,
    random_unit_coefficients,
)
from dvrcert.config import (
    DEFAULT_CHARSET,
    DEFAULT_CLAIM_SAMPLES,
    DEFAULT_DEGREE_BOUND,
    DEFAULT_DVR_SAMPLES,
    DEFAULT_EQ6_SAMPLES,
    DEFAULT_MAX_LEVEL,
    DEFAULT_N_MAX,
    DEFAULT_ORACLE_SAMPLES,
    DEFAULT_PRECISION,
    DEFAULT_R_MAX,
    DEFAULT_SEED,
    DEFAULT_SLACK,
    DEFAULT_TRIALS,
)
from dvrcert.harness.ktrigger import IKernelTrigger, call_ktrigger
from dvrcert.lib.exceptions import DCConfigError, DCError
from dvrcert.lib.expr import parse_a
from dvrcert.lib.fast_format_str import fast_format_str
from dvrcert.lib.l10n import _
from dvrcert.lib.log import logger

__all__ = [
    "ALL_SUITES",
    "SUPPORTED_EXTS",
    "FaultKind",
    "Instance",
    "SuiteConfig",
    "load_config_mapping",
]

SUPPORTED_EXTS = {".json", ".json5", ".cfg", ".toml", ".ini", ".yml", ".yaml"}

# Coefficient of z_2 changed by the corrupt-series fault.
CORRUPT_SERIES_INDEX = 3

ALL_SUITES = (
    "identities",
    "trick-identities",
    "dvr-witnesses",
    "c-normal-form",
    "eq6",
    "claim",
    "ex1",
    "ex2",
    "nilpotent-witness",
    "integral-closure",
    "nonfiniteness",
    "oracle-equivalence",
)


class FaultKind(enum.Enum):
    """Deliberate fault injected into a suite run."""

    NONE = "none"
    CORRUPT_SERIES = "corrupt-series"
    CORRUPT_CERTIFICATE = "corrupt-certificate"


def _toml_loadfunc(f: TextIO) -> dict[str, Any]:
    return tomllib.loads(f.read())


def _load_one(path: Path) -> dict[str, Any]:
    with path.open(encoding=DEFAULT_CHARSET) as f:
        if path.suffix in {".json", ".json5"}:
            loadfunc = json.load
            filetype = "JSON5"
        elif path.suffix in {".cfg", ".toml", ".ini"}:
            loadfunc = _toml_loadfunc
            filetype = "TOML"
        elif path.suffix in {".yml", ".yaml"}:
            loadfunc = yaml.safe_load
            filetype = "YAML"
        else:
            raise DCConfigError(
                fast_format_str(
                    _("Unknown file type: ${{path}}"),
                    fmt={"path": str(path)},
                ),
            )
        logger.debug("Loading config file as '%s': %s", filetype, path)
        try:
            data = loadfunc(f)
        except (ValueError, json.JSON5DecodeError, yaml.YAMLError) as exc:
            raise DCConfigError(
                fast_format_str(
                    _("Cannot parse ${{path}}: ${{err}}"),
                    fmt={"path": str(path), "err": str(exc)},
                ),
            ) from exc
    if data is None:
        return {}
    if not isinstance(data, dict):
        raise DCConfigError(
            fast_format_str(
                _("${{path}} must hold a mapping at its top level."),
                fmt={"path": str(path)},
            ),
        )
    return data


def _load_from_file(path: Path, loaded: list[Path]) -> dict[str, Any]:
    path = path.resolve()
    if path in loaded:
        logger.warning("Circular dependency detected: %s", path)
        call_ktrigger(
            IKernelTrigger.on_warning,
            message=fast_format_str(
                _("Circular include of ${{path}} skipped."),
                fmt={"path": str(path)},
            ),
        )
        return {}
    loaded.append(path)
    data = _load_one(path)
    includes = data.pop("includes", [])
    if not isinstance(includes, list) or not all(
        isinstance(item, str) for item in includes
    ):
        raise DCConfigError(
            fast_format_str(
                _("'includes' in ${{path}} must be a list of file names."),
                fmt={"path": str(path)},
            ),
        )
    for file in includes:
        data.update(_load_from_file(path.parent / file, loaded))
    dirpath = Path(str(path) + ".d")
    if dirpath.is_dir():
        for file in sorted(dirpath.rglob("*")):
            if file.is_file():
                data.update(_load_from_file(file, loaded))
    return data


def load_config_mapping(path: Path) -> dict[str, Any]:
    """Load the merged raw mapping of a configuration file.

    A path without a known suffix is tried with every supported suffix.

    Args:
        path (Path): File path.

    Returns:
        dict[str, Any]: The merged keys.

    Raises:
        DCConfigError: If the file is missing or malformed.

    """
    if not path.is_file():
        for ext in sorted(SUPPORTED_EXTS):
            candidate = path.with_suffix(ext)
            if candidate.is_file():
                return _load_from_file(candidate, [])
        raise DCConfigError(
            fast_format_str(
                _("Configuration file ${{path}} does not exist."),
                fmt={"path": str(path)},
            ),
        )
    return _load_from_file(path, [])


@dataclass(frozen=True)
class Instance:
    """A built construction together with the series table in use."""

    params: ConstructionParams
    table: ZSeriesTable


@dataclass(frozen=True)
class SuiteConfig:  # pylint: disable=too-many-instance-attributes
    """Everything a suite run depends on."""

    base_mode: str = "poly"
    field: str = "rationals"
    q: int | None = None
    p: int | None = None
    coefficients: str = "ones"
    coefficient_seed: int = 0
    coefficient_values: tuple[str, ...] = ()
    exponents: str = "minimal"
    exponent_values: tuple[int, ...] = ()
    r_max: int = DEFAULT_R_MAX
    precision: int = DEFAULT_PRECISION
    degree_bound: int = DEFAULT_DEGREE_BOUND
    max_level: int = DEFAULT_MAX_LEVEL
    trials: int = DEFAULT_TRIALS
    seed: int = DEFAULT_SEED
    n_max: int = DEFAULT_N_MAX
    slack: int = DEFAULT_SLACK
    oracle_samples: int = DEFAULT_ORACLE_SAMPLES
    dvr_samples: int = DEFAULT_DVR_SAMPLES
    eq6_samples: int = DEFAULT_EQ6_SAMPLES
    claim_samples: int = DEFAULT_CLAIM_SAMPLES
    suites: tuple[str, ...] = ALL_SUITES
    fault: str = FaultKind.NONE.value
    name: str = "default"

    @classmethod
    @beartype
    def from_mapping(cls, data: Mapping[str, Any]) -> SuiteConfig:
        """Build a configuration from raw keys.

        Args:
            data (Mapping[str, Any]): Raw keys, e.g. from a file.

        Returns:
            SuiteConfig: The configuration.

        Raises:
            DCConfigError: On unknown keys or values of the wrong type.

        """
        known = {f.name: f for f in dataclasses.fields(cls)}
        unknown = sorted(set(data) - set(known))
        if unknown:
            raise DCConfigError(
                fast_format_str(
                    _("Unknown configuration keys: ${{keys}}."),
                    fmt={"keys": ", ".join(unknown)},
                ),
                hint=fast_format_str(
                    _("Known keys are: ${{keys}}."),
                    fmt={"keys": ", ".join(sorted(known))},
                ),
            )
        values: dict[str, Any] = {}
        for key, raw in data.items():
            values[key] = _coerce_value(key, raw, cls.__dataclass_fields__[key])
        config = cls(**values)
        problems = config.violations()
        if problems:
            raise DCConfigError("; ".join(problems))
        return config

    @classmethod
    def load(cls, path: Path) -> SuiteConfig:
        """Load a configuration file.

        Args:
            path (Path): File path.

        Returns:
            SuiteConfig: The configuration, named after the file.

        """
        data = load_config_mapping(path)
        data.setdefault("name", path.stem)
        return cls.from_mapping(data)

    def replace(self, **changes: Any) -> SuiteConfig:  # noqa: ANN401
        """Get a copy with some keys changed.

        Args:
            **changes (Any): New values.

        Returns:
            SuiteConfig: The validated copy.

        """
        return SuiteConfig.from_mapping({**self.as_dict(), **changes})

    def as_dict(self) -> dict[str, Any]:
        """Get the keys as plain JSON values.

        Returns:
            dict[str, Any]: The configuration echo.

        """
        result = dataclasses.asdict(self)
        for key, value in result.items():
            if isinstance(value, tuple):
                result[key] = list(value)
        return result

    def violations(self) -> list[str]:  # noqa: C901
        """Check ranges and choices.

        Returns:
            list[str]: Problems, empty if the configuration is usable.

        """
        problems: list[str] = []
        choices = {
            "base_mode": {m.value for m in BaseRingMode},
            "field": {k.value for k in ResidueFieldKind},
            "coefficients": {"ones", "random-units", "explicit"},
            "exponents": {"minimal", "explicit"},
            "fault": {f.value for f in FaultKind},
        }
        for key, allowed in choices.items():
            value = getattr(self, key)
            if value not in allowed:
                problems.append(
                    fast_format_str(
                        _(
                            "${{key}} must be one of ${{allowed}}, "
                            "got '${{value}}'.",
                        ),
                        fmt={
                            "key": key,
                            "allowed": ", ".join(sorted(allowed)),
                            "value": value,
                        },
                    ),
                )
        for key in (
            "precision",
            "degree_bound",
            "max_level",
            "trials",
            "n_max",
            "oracle_samples",
            "dvr_samples",
            "eq6_samples",
            "claim_samples",
        ):
            if getattr(self, key) <= 0:
                problems.append(
                    fast_format_str(
                        _("${{key}} must be positive."),
                        fmt={"key": key},
                    ),
                )
        if self.r_max < 1:
            problems.append(_("r_max must be at least 1."))
        if self.slack < 0:
            problems.append(_("slack must not be negative."))
        size = self.r_max + 2
        explicit = self.coefficients == "explicit"
        if explicit and len(self.coefficient_values) != size:
            problems.append(
                fast_format_str(
                    _(
                        "coefficient_values needs ${{size}} entries, "
                        "got ${{got}}.",
                    ),
                    fmt={"size": size, "got": len(self.coefficient_values)},
                ),
            )
        if self.exponents == "explicit" and len(self.exponent_values) != size:
            problems.append(
                fast_format_str(
                    _("exponent_values needs ${{size}} entries, got ${{got}}."),
                    fmt={"size": size, "got": len(self.exponent_values)},
                ),
            )
        for suite in self.suites:
            if suite not in ALL_SUITES:
                problems.append(
                    fast_format_str(
                        _("Unknown suite '${{suite}}'."),
                        fmt={"suite": suite},
                    ),
                )
        return problems

    @property
    def base_config(self) -> BaseRingConfig:
        """The base ring settings."""
        return BaseRingConfig(
            BaseRingMode(self.base_mode),
            ResidueFieldKind(self.field),
            self.q,
            self.p,
        )

    def build(self) -> Instance:
        """Build the construction, with the configured fault if any.

        Returns:
            Instance: The construction and its series table.

        Raises:
            DCConfigError: If a hypothesis of the construction fails.

        """
        base = self.base_config.build()
        if self.coefficients == "ones":
            a = ones_coefficients(base, self.r_max)
        elif self.coefficients == "random-units":
            a = random_unit_coefficients(
                base,
                self.r_max,
                self.coefficient_seed,
            )
        else:
            try:
                a = [parse_a(text, base) for text in self.coefficient_values]
            except DCError as exc:
                raise DCConfigError(
                    fast_format_str(
                        _("Bad coefficient value: ${{err}}"),
                        fmt={"err": str(exc)},
                    ),
                ) from exc
        if self.exponents == "minimal":
            n = minimal_exponents(self.r_max)
        else:
            n = list(self.exponent_values)
        params = build_params(base, a, n, self.r_max)
        table = params.series
        if self.fault == FaultKind.CORRUPT_SERIES.value:
            table = table.corrupt(2, CORRUPT_SERIES_INDEX)
        logger.debug(
            "Built instance %s over %s.",
            self.name,
            base.config.describe(),
        )
        return Instance(params, table)


def _is_int(raw: object) -> bool:
    return isinstance(raw, int) and not isinstance(raw, bool)


def _not_an_int(key: str) -> DCConfigError:
    return DCConfigError(
        fast_format_str(_("${{key}} must be an integer."), fmt={"key": key}),
    )


def _coerce_value(
    key: str,
    raw: object,
    spec: dataclasses.Field[Any],
) -> object:
    default = spec.default
    if isinstance(default, tuple):
        if not isinstance(raw, list | tuple):
            raise DCConfigError(
                fast_format_str(
                    _("${{key}} must be a list."),
                    fmt={"key": key},
                ),
            )
        items = tuple(raw)
        expected = int if key == "exponent_values" else str
        check = _is_int if expected is int else lambda v: isinstance(v, str)
        if not all(check(v) for v in items):
            raise DCConfigError(
                fast_format_str(
                    _("${{key}} must hold ${{kind}} values."),
                    fmt={"key": key, "kind": expected.__name__},
                ),
            )
        return items
    if key in {"q", "p"}:
        if raw is not None and not _is_int(raw):
            raise _not_an_int(key)
        return raw
    expected_type = type(default)
    if expected_type is int and not _is_int(raw):
        raise _not_an_int(key)
    if expected_type is str and not isinstance(raw, str):
        raise DCConfigError(
            fast_format_str(_("${{key}} must be a string."), fmt={"key": key}),
        )
    return raw
