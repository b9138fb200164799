"""Campaign runner: reference states, figure data, and stochastic bound fuzzing.

Everything here is deterministic under a master seed.  Per-state seeds are
derived through ``numpy.random.SeedSequence([master_seed, index])``, so any
witness record can be replayed bit-for-bit from its own fields.  CSV output
prints floats with 12 significant digits and no locale dependence.
"""

from __future__ import annotations

import io
from dataclasses import dataclass

import numpy as np

from .core import StateVector, load_state, partial_trace, pure_to_density
from .errors import ConfigError, IoError, PreconditionError, UnsupportedStateClassError
from .measures import (
    ALPHA_WINDOW,
    AlphaMu,
    renyi_entanglement_pure,
    renyi_entanglement_two_qubit,
)
from .monogamy import ckw_check, detect_ordering, lemma1_check, scalar_weight_inequality, theorem_bound
from .polygamy import reoa_cut, theorem3_bound, wclass_from_state, wclass_pair_coa
from .wclass import build_wclass, random_wclass
from . import core, measures

# Order at which the six-decimal reference values of the worked examples are
# quoted.  The exact window endpoint (sqrt(7)-1)/2 shifts them by ~5e-5.
REFERENCE_ALPHA = 0.823

MODES = ("monogamy", "polygamy", "lemma1", "ckw", "scalar")
STATE_CLASSES = ("haar", "wclass", "file")


# ---------------------------------------------------------------------------
# reference states
# ---------------------------------------------------------------------------

def generalized_schmidt_state(lambdas, phase: float = 0.0) -> StateVector:
    """Three-qubit state l0|000> + l1 e^{i phase}|100> + l2|101> + l3|110> + l4|111>."""
    l0, l1, l2, l3, l4 = (float(x) for x in lambdas)
    amps = np.zeros(8, dtype=complex)
    amps[0b000] = l0
    amps[0b100] = l1 * np.exp(1j * phase)
    amps[0b101] = l2
    amps[0b110] = l3
    amps[0b111] = l4
    return StateVector(amps)


def reference_schmidt_state() -> StateVector:
    """The worked-example state: l0 = l1 = 1/2, l2 = l3 = l4 = sqrt(6)/6."""
    s = np.sqrt(6.0) / 6.0
    return generalized_schmidt_state((0.5, 0.5, s, s, s))


def w_state(n_parties: int = 3) -> StateVector:
    """Uniform single-excitation state on ``n_parties`` qubits."""
    amp = 1.0 / np.sqrt(n_parties)
    _, psi = build_wclass(amp, (amp,) * (n_parties - 1))
    return psi


# ---------------------------------------------------------------------------
# figure data
# ---------------------------------------------------------------------------

def fmt12(value) -> str:
    """Float to 12 significant digits; empty string for missing values."""
    if value is None:
        return ""
    return f"{float(value):.12g}"


def figure_rows(figure: str, alpha: float = REFERENCE_ALPHA):
    """Recomputed bound curves for the two reference displays.

    ``fig1``: the Schmidt example over mu in [2, 10] step 0.05, columns
    (mu, lhs, ours, prior) with lhs the cut entanglement power, ours the
    ladder-weighted pair sum, prior the unweighted pair sum.  ``fig2``: the
    W state over mu in [0, 1] step 0.01 with assisted quantities.  Everything
    is recomputed from the state; no tabulated constants.
    """
    if figure == "fig1":
        psi = reference_schmidt_state()
        rho = pure_to_density(psi)
        e_cut = renyi_entanglement_pure(psi, {"A"}, alpha)
        e_pairs = [
            renyi_entanglement_two_qubit(partial_trace(rho, {"A", lab}), alpha)
            for lab in ("B1", "B2")
        ]
        mus = [2.0 + k / 20.0 for k in range(161)]
        rows = []
        for mu in mus:
            terms = [e**mu for e in e_pairs]
            ours = terms[0] + (2.0**mu - 1.0) * terms[1]
            rows.append((mu, e_cut**mu, ours, sum(terms)))
        return ("mu", "lhs", "ours", "prior"), rows
    if figure == "fig2":
        psi = w_state(3)
        w = wclass_from_state(psi)
        e_cut = reoa_cut(w, alpha)
        coas = [wclass_pair_coa(w, i) for i in (1, 2)]
        e_pairs = [measures.f_alpha(c * c, alpha) for c in coas]
        mus = [k / 100.0 for k in range(101)]
        rows = []
        for mu in mus:
            terms = [e**mu for e in e_pairs]
            ours = terms[0] + (2.0**mu - 1.0) * terms[1]
            rows.append((mu, e_cut**mu, ours, sum(terms)))
        return ("mu", "lhs", "ours", "prior"), rows
    raise ConfigError(f"unknown figure {figure!r}; expected fig1 or fig2")


def write_csv(header, rows, stream) -> None:
    stream.write(",".join(header) + "\n")
    for row in rows:
        stream.write(",".join(fmt12(x) for x in row) + "\n")


def figure_csv(figure: str, alpha: float = REFERENCE_ALPHA) -> str:
    header, rows = figure_rows(figure, alpha)
    buf = io.StringIO()
    write_csv(header, rows, buf)
    return buf.getvalue()


# ---------------------------------------------------------------------------
# campaign configuration
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CampaignConfig:
    """Fully resolved fuzzing campaign parameters."""

    mode: str
    n_states: int = 1000
    n_qubits: int = 3
    alpha_grid: tuple[float, ...] = ALPHA_WINDOW
    mu_grid: tuple[float, ...] = (2.0, 3.0, 5.0)
    seed: int = 20240823
    state_class: str = "haar"
    tolerance: float = 1e-9
    state_file: str | None = None

    def __post_init__(self):
        if self.mode not in MODES:
            raise ConfigError(f"mode must be one of {MODES}, got {self.mode!r}")
        if self.state_class not in STATE_CLASSES:
            raise ConfigError(f"class must be one of {STATE_CLASSES}, got {self.state_class!r}")
        if self.n_states < 1:
            raise ConfigError(f"n_states must be at least 1, got {self.n_states}")
        if not self.alpha_grid or not self.mu_grid:
            raise ConfigError("alpha and mu grids must be nonempty")
        if not self.tolerance > 0:
            raise ConfigError(f"tolerance must be positive, got {self.tolerance}")
        if self.state_class == "file" and not self.state_file:
            raise ConfigError("state class 'file' needs a state file path")
        object.__setattr__(self, "alpha_grid", tuple(float(a) for a in self.alpha_grid))
        object.__setattr__(self, "mu_grid", tuple(float(m) for m in self.mu_grid))


_CONFIG_KEYS = {
    "mode": str,
    "states": int,
    "qubits": int,
    "alpha": str,
    "mu": str,
    "seed": int,
    "class": str,
    "tolerance": float,
    "state": str,
}


def parse_config_file(path) -> dict:
    """Flat key=value campaign file; '#' starts a comment."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise IoError(f"cannot read config file {path}: {exc}") from exc
    out: dict = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"{path}:{lineno}: expected key=value, got {raw!r}")
        key, value = (part.strip() for part in line.split("=", 1))
        if key not in _CONFIG_KEYS:
            raise ConfigError(f"{path}:{lineno}: unknown key {key!r}")
        try:
            out[key] = _CONFIG_KEYS[key](value)
        except ValueError as exc:
            raise ConfigError(f"{path}:{lineno}: bad value for {key}: {exc}") from exc
    return out


def parse_grid(text) -> tuple[float, ...]:
    if isinstance(text, (tuple, list)):
        return tuple(float(x) for x in text)
    try:
        return tuple(float(part) for part in str(text).split(",") if part.strip())
    except ValueError as exc:
        raise ConfigError(f"bad numeric grid {text!r}: {exc}") from exc


_MODE_MU_DEFAULTS = {
    "monogamy": (2.0, 3.0, 5.0),
    "polygamy": (0.25, 0.5, 0.75, 1.0),
    "lemma1": (2.0, 3.0, 4.0),
    "ckw": (2.0,),
    "scalar": tuple(np.round(np.linspace(0.0, 6.0, 25), 10)),
}


def build_config(settings: dict) -> CampaignConfig:
    """Resolve a key=value mapping (file and/or CLI overrides) into a config."""
    mode = settings.get("mode")
    if mode is None:
        raise ConfigError("campaign mode is required")
    kwargs = {
        "mode": mode,
        "n_states": int(settings.get("states", 1000)),
        "n_qubits": int(settings.get("qubits", 3)),
        "seed": int(settings.get("seed", 20240823)),
        "state_class": settings.get("class", "wclass" if mode == "polygamy" else "haar"),
        "tolerance": float(settings.get("tolerance", 1e-9)),
        "state_file": settings.get("state"),
    }
    if "alpha" in settings and settings["alpha"] is not None:
        kwargs["alpha_grid"] = parse_grid(settings["alpha"])
    if "mu" in settings and settings["mu"] is not None:
        kwargs["mu_grid"] = parse_grid(settings["mu"])
    else:
        kwargs["mu_grid"] = _MODE_MU_DEFAULTS.get(mode, (2.0,))
    return CampaignConfig(**kwargs)


# ---------------------------------------------------------------------------
# witnesses and campaigns
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class WitnessRecord:
    """One evaluated inequality instance, replayable from its own fields."""

    index: int
    mode: str
    state_class: str
    n_qubits: int
    state_seed: int
    alpha: float | None
    mu: float | None
    lhs: float
    rhs: float
    margin: float
    baseline_rhs: float
    t: float | None = None

    CSV_HEADER = (
        "index",
        "mode",
        "class",
        "qubits",
        "state_seed",
        "alpha",
        "mu",
        "t",
        "lhs",
        "rhs",
        "margin",
        "baseline_rhs",
    )

    def to_csv_row(self) -> tuple:
        return (
            str(self.index),
            self.mode,
            self.state_class,
            str(self.n_qubits),
            str(self.state_seed),
            fmt12(self.alpha),
            fmt12(self.mu),
            fmt12(self.t),
            fmt12(self.lhs),
            fmt12(self.rhs),
            fmt12(self.margin),
            fmt12(self.baseline_rhs),
        )


def derive_seed(master_seed: int, index: int) -> int:
    return int(np.random.SeedSequence([master_seed, index]).generate_state(1, np.uint64)[0])


def _campaign_state(config: CampaignConfig, index: int):
    seed = derive_seed(config.seed, index)
    if config.state_class == "haar":
        return seed, core.haar_random_state(config.n_qubits, seed)
    if config.state_class == "wclass":
        return seed, random_wclass(config.n_qubits, seed).to_state_vector()
    return 0, load_state(config.state_file)


@dataclass(frozen=True)
class CampaignResult:
    """Aggregate of a fuzzing run plus every evaluated witness."""

    config: CampaignConfig
    records: tuple[WitnessRecord, ...]
    n_sampled: int
    n_satisfied: int
    n_skipped: int

    @property
    def n_violations(self) -> int:
        tol = self.config.tolerance
        return sum(1 for r in self.records if r.margin < -tol)

    @property
    def min_margin(self) -> float:
        return min((r.margin for r in self.records), default=float("nan"))

    @property
    def mean_tightness_gain(self) -> float:
        gains = [abs(r.rhs - r.baseline_rhs) for r in self.records]
        return float(np.mean(gains)) if gains else float("nan")

    @property
    def worst(self) -> WitnessRecord | None:
        return min(self.records, key=lambda r: r.margin, default=None)

    def summary(self) -> dict:
        return {
            "mode": self.config.mode,
            "state_class": self.config.state_class,
            "n_qubits": self.config.n_qubits,
            "seed": self.config.seed,
            "tolerance": self.config.tolerance,
            "n_sampled": self.n_sampled,
            "n_hypothesis_satisfied": self.n_satisfied,
            "n_skipped": self.n_skipped,
            "n_records": len(self.records),
            "n_violations": self.n_violations,
            "min_margin": None if not self.records else self.min_margin,
            "mean_tightness_gain": None if not self.records else self.mean_tightness_gain,
            "worst": None if self.worst is None else vars(self.worst).copy(),
        }

    def write_records_csv(self, stream) -> None:
        stream.write(",".join(WitnessRecord.CSV_HEADER) + "\n")
        for record in self.records:
            stream.write(",".join(record.to_csv_row()) + "\n")


def _scalar_campaign(config: CampaignConfig) -> CampaignResult:
    records = []
    ts = np.linspace(0.0, 1.0, 200)
    index = 0
    for x in config.mu_grid:
        for t in ts:
            check = scalar_weight_inequality(float(t), float(x))
            # orient so that "margin >= -tol" always means the regime holds
            oriented = check.margin if check.regime == "lower" else -check.margin
            records.append(
                WitnessRecord(
                    index=index,
                    mode="scalar",
                    state_class="grid",
                    n_qubits=0,
                    state_seed=0,
                    alpha=None,
                    mu=float(x),
                    t=float(t),
                    lhs=(1.0 + t) ** x,
                    rhs=1.0 + (2.0**x - 1.0) * t**x,
                    margin=float(oriented),
                    baseline_rhs=1.0 + (2.0**x - 1.0) * t**x,
                )
            )
            index += 1
    return CampaignResult(config, tuple(records), len(records), len(records), 0)


def run_campaign(config: CampaignConfig) -> CampaignResult:
    """Sample states, filter by hypothesis, evaluate margins, collect witnesses.

    States whose hypothesis fails are counted and skipped, never asserted:
    the weighted bounds claim nothing for them.
    """
    if config.mode == "scalar":
        return _scalar_campaign(config)
    if config.mode == "monogamy" and config.state_class == "haar" and config.n_qubits > 3:
        raise ConfigError(
            "haar states beyond 3 qubits have no computable ordering tails; use class=wclass"
        )

    records: list[WitnessRecord] = []
    n_satisfied = 0
    n_skipped = 0
    n_states = 1 if config.state_class == "file" else config.n_states
    for index in range(n_states):
        seed, psi = _campaign_state(config, index)
        common = {
            "index": index,
            "state_class": config.state_class,
            "n_qubits": psi.n_qubits,
            "state_seed": seed,
        }
        if config.mode == "ckw":
            report = ckw_check(psi)
            n_satisfied += 1
            records.append(
                WitnessRecord(
                    mode="ckw",
                    alpha=None,
                    mu=None,
                    lhs=report.lhs,
                    rhs=report.rhs,
                    margin=report.margin,
                    baseline_rhs=report.baseline_rhs,
                    **common,
                )
            )
        elif config.mode == "lemma1":
            n_satisfied += 1
            for x in config.mu_grid:
                report = lemma1_check(psi, float(x))
                records.append(
                    WitnessRecord(
                        mode="lemma1",
                        alpha=None,
                        mu=float(x),
                        lhs=report.lhs,
                        rhs=report.rhs,
                        margin=report.margin,
                        baseline_rhs=report.baseline_rhs,
                        **common,
                    )
                )
        elif config.mode == "monogamy":
            profile = detect_ordering(psi)
            if not profile.satisfied:
                n_skipped += 1
                continue
            n_satisfied += 1
            for alpha in config.alpha_grid:
                for mu in config.mu_grid:
                    report = theorem_bound(psi, profile, AlphaMu(alpha, mu))
                    records.append(
                        WitnessRecord(
                            mode="monogamy",
                            alpha=float(alpha),
                            mu=float(mu),
                            lhs=report.lhs,
                            rhs=report.rhs,
                            margin=report.margin,
                            baseline_rhs=report.baseline_rhs,
                            **common,
                        )
                    )
        elif config.mode == "polygamy":
            try:
                w = wclass_from_state(psi)
            except UnsupportedStateClassError as exc:
                raise ConfigError(f"polygamy campaigns need W-class states: {exc}") from exc
            profile = detect_ordering(psi)
            if not profile.satisfied:
                n_skipped += 1
                continue
            n_satisfied += 1
            for alpha in config.alpha_grid:
                for mu in config.mu_grid:
                    report = theorem3_bound(w, profile, AlphaMu(alpha, mu))
                    records.append(
                        WitnessRecord(
                            mode="polygamy",
                            alpha=float(alpha),
                            mu=float(mu),
                            lhs=report.lhs,
                            rhs=report.rhs,
                            margin=report.margin,
                            baseline_rhs=report.baseline_rhs,
                            **common,
                        )
                    )
        else:  # pragma: no cover - guarded by CampaignConfig
            raise ConfigError(f"unhandled mode {config.mode!r}")
    return CampaignResult(config, tuple(records), n_states, n_satisfied, n_skipped)


def replay_record(record: WitnessRecord, state: StateVector | None = None) -> float:
    """Recompute a witness margin from its recorded parameters."""
    if record.mode == "scalar":
        check = scalar_weight_inequality(record.t, record.mu)
        return check.margin if check.regime == "lower" else -check.margin
    if state is None:
        if record.state_class == "haar":
            state = core.haar_random_state(record.n_qubits, record.state_seed)
        elif record.state_class == "wclass":
            state = random_wclass(record.n_qubits, record.state_seed).to_state_vector()
        else:
            raise ConfigError("replaying a file-class record needs the state passed in")
    if record.mode == "ckw":
        return ckw_check(state).margin
    if record.mode == "lemma1":
        return lemma1_check(state, record.mu).margin
    if record.mode == "monogamy":
        profile = detect_ordering(state)
        if not profile.satisfied:
            raise PreconditionError("recorded state no longer satisfies the hypothesis")
        return theorem_bound(state, profile, AlphaMu(record.alpha, record.mu)).margin
    if record.mode == "polygamy":
        profile = detect_ordering(state)
        if not profile.satisfied:
            raise PreconditionError("recorded state no longer satisfies the hypothesis")
        return theorem3_bound(wclass_from_state(state), profile, AlphaMu(record.alpha, record.mu)).margin
    raise ConfigError(f"cannot replay mode {record.mode!r}")


def falpha_table(alphas, points: int = 101):
    """Rows (x, f_alpha(x) per order) on a uniform grid of [0, 1]."""
    alphas = tuple(float(a) for a in alphas)
    if not alphas:
        raise ConfigError("need at least one alpha")
    if points < 2:
        raise ConfigError(f"need at least 2 grid points, got {points}")
    xs = np.linspace(0.0, 1.0, points)
    header = ("x",) + tuple(f"f_alpha={fmt12(a)}" for a in alphas)
    rows = [(float(x),) + tuple(measures.f_alpha(float(x), a) for a in alphas) for x in xs]
    return header, rows
