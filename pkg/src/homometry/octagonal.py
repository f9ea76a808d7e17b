"""Planar octagonal cut-and-project scheme over the ring Z[ξ], ξ = exp(iπ/4).

Ring elements are integer 4-tuples (a, b, c, d) for a + bξ + cξ² + dξ³ with
ξ⁴ = -1.  The physical embedding evaluates at ξ itself; the internal
embedding composes with the star conjugation ξ ↦ ξ³.  Together they give the
Minkowski embedding of the ring as a lattice in R⁴ whose point density is
computed from the basis determinant (value 1/4).

Model sets are produced by keeping lattice points whose internal image lands
in a polyomino window; their autocorrelation coefficients are densities
times the window covariogram, and their diffraction is pure point with
amplitudes proportional to the window indicator transform.  Two windows with
equal covariogram give model sets with identical intensities but different
amplitudes; the machinery below also exhibits the phase-ratio pathologies,
a local-derivability witness and the 3-point discrimination.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, NamedTuple

import numpy as np

from .covariogram import Polyomino, covariogram, indicator_ft
from .pointsets import canonical_pair

_SQRT2_HALF = math.sqrt(2.0) / 2.0

#: Default window offset in internal space.  The projected ring is dense, so
#: a generic (irrationally related) shift keeps every internal point safely
#: away from cell boundaries; (0, 0) would also be generic here but the
#: guard in :func:`generate_model_set` makes the choice explicit.
DEFAULT_WINDOW_SHIFT = (1e-5, math.sqrt(2.0) * 1e-5)

_BOUNDARY_TOL = 1e-12


@dataclass(frozen=True)
class Cyc8:
    """Element a + bξ + cξ² + dξ³ of Z[ξ] with ξ an 8th root of unity."""

    a: int
    b: int
    c: int
    d: int

    @property
    def coeffs(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)

    def __add__(self, other: "Cyc8") -> "Cyc8":
        return Cyc8(self.a + other.a, self.b + other.b, self.c + other.c, self.d + other.d)

    def __sub__(self, other: "Cyc8") -> "Cyc8":
        return Cyc8(self.a - other.a, self.b - other.b, self.c - other.c, self.d - other.d)

    def __neg__(self) -> "Cyc8":
        return Cyc8(-self.a, -self.b, -self.c, -self.d)

    def __mul__(self, other: "Cyc8") -> "Cyc8":
        # convolution of coefficient polynomials reduced by xi^4 = -1
        sa, sb, sc, sd = self.coeffs
        oa, ob, oc, od = other.coeffs
        return Cyc8(
            sa * oa - sb * od - sc * oc - sd * ob,
            sa * ob + sb * oa - sc * od - sd * oc,
            sa * oc + sb * ob + sc * oa - sd * od,
            sa * od + sb * oc + sc * ob + sd * oa,
        )

    def star(self) -> "Cyc8":
        """Algebraic conjugation ξ ↦ ξ³, reduced mod ξ⁴ = -1; an involution."""
        return Cyc8(self.a, self.d, -self.c, self.b)

    @classmethod
    def zero(cls) -> "Cyc8":
        return cls(0, 0, 0, 0)

    @classmethod
    def one(cls) -> "Cyc8":
        return cls(1, 0, 0, 0)


@dataclass(frozen=True)
class HalfCyc8:
    """Element of the index-2 superlattice: numerator / 2."""

    numerator: Cyc8


def star(x: Cyc8) -> Cyc8:
    return x.star()


def embed_physical(x: Cyc8) -> np.ndarray:
    """Evaluate at ξ = (√2/2)(1 + i); returns (Re, Im)."""
    return np.array(
        [
            x.a + (x.b - x.d) * _SQRT2_HALF,
            x.c + (x.b + x.d) * _SQRT2_HALF,
        ]
    )


def embed_internal(x: Cyc8) -> np.ndarray:
    """Physical embedding of the star conjugate."""
    return embed_physical(x.star())


def _embed_many(a, b, c, d):
    px = a + (b - d) * _SQRT2_HALF
    py = c + (b + d) * _SQRT2_HALF
    ix = a + (d - b) * _SQRT2_HALF
    iy = -c + (d + b) * _SQRT2_HALF
    return px, py, ix, iy


@lru_cache(maxsize=1)
def lattice_density() -> float:
    """Points per unit 4-volume of the embedded ring lattice: 1/|det B|.

    The basis matrix stacks (physical, internal) images of 1, ξ, ξ², ξ³;
    the value is 0.25 but is computed, not hard-coded.
    """
    rows = []
    for j in range(4):
        coeffs = [0, 0, 0, 0]
        coeffs[j] = 1
        x = Cyc8(*coeffs)
        rows.append(np.concatenate([embed_physical(x), embed_internal(x)]))
    return float(1.0 / abs(np.linalg.det(np.array(rows))))


@dataclass(frozen=True)
class SchemeConfig:
    """Cut-and-project configuration: window polyomino and its placement."""

    window: Polyomino
    window_shift: tuple[float, float] = DEFAULT_WINDOW_SHIFT
    density: float | None = None

    def __post_init__(self):
        if self.density is None:
            object.__setattr__(self, "density", lattice_density())
        if self.density <= 0:
            raise ValueError("lattice density must be positive")

    @property
    def point_density(self) -> float:
        """Density of the resulting model set: dens(L) * vol(W)."""
        return self.density * self.window.area


@dataclass(frozen=True)
class ModelSetPatch:
    """All model-set points within physical radius R, sorted by coefficients."""

    points: tuple[Cyc8, ...]
    radius: float
    scheme: SchemeConfig
    _coeffs: np.ndarray = field(repr=False, compare=False, default=None)

    def __post_init__(self):
        if self._coeffs is None:
            arr = np.array([p.coeffs for p in self.points], dtype=np.int64).reshape(-1, 4)
            object.__setattr__(self, "_coeffs", arr)
        self._coeffs.setflags(write=False)

    def __len__(self) -> int:
        return len(self.points)

    @property
    def coeff_array(self) -> np.ndarray:
        return self._coeffs

    @property
    def physical(self) -> np.ndarray:
        a, b, c, d = (self._coeffs[:, i].astype(np.float64) for i in range(4))
        px, py, _, _ = _embed_many(a, b, c, d)
        return np.column_stack([px, py])

    @property
    def internal(self) -> np.ndarray:
        a, b, c, d = (self._coeffs[:, i].astype(np.float64) for i in range(4))
        _, _, ix, iy = _embed_many(a, b, c, d)
        return np.column_stack([ix, iy])

    def density(self) -> float:
        return len(self.points) / (math.pi * self.radius**2)

    def to_json(self) -> str:
        phys = self.physical
        intern = self.internal
        pts = [
            {
                "coeffs": [int(v) for v in self._coeffs[i]],
                "phys": [float(phys[i, 0]), float(phys[i, 1])],
                "int": [float(intern[i, 0]), float(intern[i, 1])],
            }
            for i in range(len(self.points))
        ]
        return json.dumps(
            {"radius": self.radius, "window": json.loads(self.scheme.window.to_json()), "points": pts}
        )

    def csv_rows(self) -> Iterable[str]:
        phys = self.physical
        intern = self.internal
        for i in range(len(self.points)):
            a, b, c, d = (int(v) for v in self._coeffs[i])
            yield f"{a},{b},{c},{d},{phys[i, 0]:.12g},{phys[i, 1]:.12g},{intern[i, 0]:.12g},{intern[i, 1]:.12g}"


def _window_radius(scheme: SchemeConfig) -> float:
    """Largest distance of the shifted window from the internal origin."""
    cells = np.array(sorted(scheme.window.cells.points), dtype=np.float64)
    shift = np.asarray(scheme.window_shift)
    best = 0.0
    for dx in (-0.5, 0.5):
        for dy in (-0.5, 0.5):
            corners = cells + shift + np.array([dx, dy])
            best = max(best, float(np.hypot(corners[:, 0], corners[:, 1]).max()))
    return best


def generate_model_set(scheme: SchemeConfig, radius: float) -> ModelSetPatch:
    """Enumerate the model-set patch of physical radius ``radius``.

    Candidates are the ring elements inside the coefficient ball
    a²+b²+c²+d² ≤ (R² + ρ²)/2 with ρ the window circumradius; by the trace
    identity |x|² + |x*|² = 2·Σ coeffs² this enumeration is complete.  A
    candidate is kept when its physical image lies in the R-ball and its
    internal image, relative to the shift, lies in one of the half-open
    window cells [f₁-1/2, f₁+1/2) × [f₂-1/2, f₂+1/2).
    """
    if radius < 0:
        raise ValueError("radius must be non-negative")
    rho = _window_radius(scheme)
    coeff_bound = (radius * radius + rho * rho) / 2.0
    m = int(math.floor(math.sqrt(coeff_bound)))
    shift_x, shift_y = scheme.window_shift

    cells = np.array(sorted(scheme.window.cells.points), dtype=np.int64)
    lo = cells.min(axis=0)
    hi = cells.max(axis=0)
    lookup = np.zeros((hi[0] - lo[0] + 1, hi[1] - lo[1] + 1), dtype=bool)
    lookup[cells[:, 0] - lo[0], cells[:, 1] - lo[1]] = True

    rng = np.arange(-m, m + 1, dtype=np.int64)
    bb, cc, dd = (g.ravel() for g in np.meshgrid(rng, rng, rng, indexing="ij"))
    norm3 = bb * bb + cc * cc + dd * dd

    kept = []
    for a in rng:
        sel = norm3 <= coeff_bound - a * a
        if not sel.any():
            continue
        b, c, d = bb[sel], cc[sel], dd[sel]
        af = float(a)
        px, py, ix, iy = _embed_many(af, b.astype(np.float64), c.astype(np.float64), d.astype(np.float64))
        inside = px * px + py * py <= radius * radius
        if not inside.any():
            continue
        b, c, d = b[inside], c[inside], d[inside]
        ux = ix[inside] - shift_x
        uy = iy[inside] - shift_y

        cellx = np.floor(ux + 0.5).astype(np.int64)
        celly = np.floor(uy + 0.5).astype(np.int64)

        near = (
            (ux >= lo[0] - 0.501) & (ux <= hi[0] + 0.501)
            & (uy >= lo[1] - 0.501) & (uy <= hi[1] + 0.501)
        )
        if near.any():
            gap_x = np.abs(np.abs(ux[near] - cellx[near]) - 0.5)
            gap_y = np.abs(np.abs(uy[near] - celly[near]) - 0.5)
            if (gap_x < _BOUNDARY_TOL).any() or (gap_y < _BOUNDARY_TOL).any():
                raise ValueError(
                    "non-generic window position: an internal point lies on a "
                    "cell boundary; perturb window_shift"
                )

        jx = cellx - lo[0]
        jy = celly - lo[1]
        ok = (jx >= 0) & (jx < lookup.shape[0]) & (jy >= 0) & (jy < lookup.shape[1])
        jx = np.clip(jx, 0, lookup.shape[0] - 1)
        jy = np.clip(jy, 0, lookup.shape[1] - 1)
        ok &= lookup[jx, jy]
        if ok.any():
            for bi, ci, di in zip(b[ok], c[ok], d[ok]):
                kept.append(Cyc8(int(a), int(bi), int(ci), int(di)))

    kept.sort(key=lambda x: x.coeffs)
    return ModelSetPatch(tuple(kept), float(radius), scheme)


def autocorr_coefficient(scheme: SchemeConfig, z: Cyc8) -> float:
    """Exact autocorrelation coefficient dens(L) * cov_W(z*)."""
    zint = embed_internal(z)
    return scheme.density * covariogram(scheme.window, zint)


# coefficient packing for O(n log n) set membership on patches
_PACK_BASE = np.int64(2048)
_PACK_OFF = np.int64(1024)


def _pack(coeffs: np.ndarray) -> np.ndarray:
    kk = coeffs.astype(np.int64) + _PACK_OFF
    return ((kk[:, 0] * _PACK_BASE + kk[:, 1]) * _PACK_BASE + kk[:, 2]) * _PACK_BASE + kk[:, 3]


def _pack_delta(z: Cyc8) -> np.int64:
    zz = np.array([z.coeffs], dtype=np.int64)
    return np.int64(((zz[0, 0] * _PACK_BASE + zz[0, 1]) * _PACK_BASE + zz[0, 2]) * _PACK_BASE + zz[0, 3])


def empirical_autocorr(patch: ModelSetPatch, z: Cyc8) -> float:
    """Finite-radius estimator: |{x in patch : x+z in patch}| / (π R²)."""
    if len(patch) == 0:
        raise ValueError("empty patch")
    keys = np.sort(_pack(patch.coeff_array))
    hits = np.isin(keys + _pack_delta(z), keys, assume_unique=True)
    return float(hits.sum()) / (math.pi * patch.radius**2)


def three_point_correlation(patch: ModelSetPatch, z1: Cyc8, z2: Cyc8) -> float:
    """Frequency of the 3-point pattern {x, x+z1, x+z2} per unit area."""
    if len(patch) == 0:
        raise ValueError("empty patch")
    keys = np.sort(_pack(patch.coeff_array))
    hits = np.isin(keys + _pack_delta(z1), keys, assume_unique=True)
    hits &= np.isin(keys + _pack_delta(z2), keys, assume_unique=True)
    return float(hits.sum()) / (math.pi * patch.radius**2)


def _as_half(k: HalfCyc8 | Cyc8) -> HalfCyc8:
    if isinstance(k, HalfCyc8):
        return k
    return HalfCyc8(Cyc8(2 * k.a, 2 * k.b, 2 * k.c, 2 * k.d))


def diffraction_amplitude(scheme: SchemeConfig, k: HalfCyc8 | Cyc8) -> complex:
    """Bragg amplitude at k in (1/2)L, evaluated at y = internal image of k."""
    half = _as_half(k)
    y = embed_internal(half.numerator) / 2.0
    phase = np.exp(2j * np.pi * (y @ np.asarray(scheme.window_shift)))
    return complex(scheme.density * indicator_ft(scheme.window, -y) * phase)


def diffraction_intensity(scheme: SchemeConfig, k: HalfCyc8 | Cyc8) -> float:
    """Bragg intensity |amplitude|²; independent of the window shift."""
    return abs(diffraction_amplitude(scheme, k)) ** 2


class _Singular:
    """Sentinel for points where the amplitude-ratio denominator vanishes."""

    __slots__ = ()

    def __repr__(self) -> str:  # pragma: no cover
        return "SINGULAR"


SINGULAR = _Singular()

#: Denominator cutoff below which the ratio is reported as SINGULAR.  The
#: phase has no continuous extension across these points, so a hard cutoff
#: with a distinguished value is the honest contract.
SINGULAR_TOL = 1e-9


def _ratio_parts(y) -> tuple[complex, complex]:
    y1, y2 = float(y[0]), float(y[1])
    num = 1 + np.exp(2j * np.pi * y2) + np.exp(2j * np.pi * (y1 + 2 * y2))
    den = 1 + 2 * np.exp(1j * np.pi * (2 * y1 + 3 * y2)) * np.cos(np.pi * y2)
    return complex(num), complex(den)


def amplitude_ratio(y) -> complex | _Singular:
    """Closed-form ratio of the two window amplitudes at internal position y.

    Returns SINGULAR when the denominator modulus falls below
    ``SINGULAR_TOL``, which happens exactly near y2 ∈ Z + {1/3, 2/3} with
    y1 ∈ Z.  Where defined the value lies on the unit circle.  Under this
    package's transform convention the quotient
    ``diffraction_amplitude`` (window 1) / (window 2) equals the complex
    conjugate of this function.
    """
    num, den = _ratio_parts(y)
    if abs(den) < SINGULAR_TOL:
        return SINGULAR
    return num / den


def phase(y) -> float | _Singular:
    """Phase χ(y) of the amplitude ratio as a fraction of a full turn."""
    r = amplitude_ratio(y)
    if r is SINGULAR:
        return SINGULAR
    return float(np.angle(r) / (2 * np.pi))


class AdditivityWitness(NamedTuple):
    y: tuple[float, float]
    y_prime: tuple[float, float]
    chi_y: float
    chi_y_prime: float
    chi_sum: float
    violation: float


class WitnessNotFound(RuntimeError):
    """Raised when a claimed structural witness is absent from the search set."""


def _mod1_distance(v: float) -> float:
    f = v % 1.0
    return min(f, 1.0 - f)


def additivity_witness(step: float = 0.25, threshold: float = 0.05) -> AdditivityWitness:
    """Search a grid for y, y' violating χ(y+y') = χ(y) + χ(y') mod 1.

    The grid step 1/4 keeps every y2 component (including sums) at distance
    ≥ 1/12 from the singular set.  Returns the maximally violating witness;
    raises :class:`WitnessNotFound` if the grid shows no violation above the
    threshold, which would falsify the non-additivity claim.
    """
    grid = [float(v) for v in np.arange(0.0, 1.0, step)]
    best: AdditivityWitness | None = None
    for y1 in grid:
        for y2 in grid:
            c1 = phase((y1, y2))
            if c1 is SINGULAR:
                continue
            for w1 in grid:
                for w2 in grid:
                    c2 = phase((w1, w2))
                    if c2 is SINGULAR:
                        continue
                    cs = phase((y1 + w1, y2 + w2))
                    if cs is SINGULAR:
                        continue
                    v = _mod1_distance(cs - c1 - c2)
                    if best is None or v > best.violation:
                        best = AdditivityWitness((y1, y2), (w1, w2), c1, c2, cs, v)
    if best is None or best.violation <= threshold:
        raise WitnessNotFound(
            f"no additivity violation above {threshold} on the step-{step} grid"
        )
    return best


def _core_cells(cells: frozenset, t: tuple[int, int]) -> set:
    shifted = {(x - t[0], y - t[1]) for (x, y) in cells}
    return set(cells) & shifted


def mld_witness(t: tuple[int, int] = (4, 5)) -> bool:
    """Exact cell-set identity behind mutual local derivability.

    For each canonical window the intersection with its (-t)-translate must
    be the single cell at the origin, and the window must be the union of 15
    integer translates of that cell.
    """
    f1, f2 = canonical_pair()
    for fset in (f1, f2):
        core = _core_cells(fset.points, t)
        if core != {(0, 0)}:
            return False
        translates = {(fx + cx, fy + cy) for (fx, fy) in fset.points for (cx, cy) in core}
        if translates != set(fset.points) or len(fset.points) != 15:
            return False
    return True


def select_verification_lags(scheme: SchemeConfig, count: int) -> list[Cyc8]:
    """Lattice lags suited to comparing the estimator with the exact law.

    Picks the ``count`` smallest-physical-norm ring elements (coefficients
    in [-3, 3], physical norm at most 2) whose coefficient is at least 30%
    of the central one, so the finite-radius edge bias stays well under the
    comparison tolerance.
    """
    density = scheme.point_density
    cands = []
    rng = range(-3, 4)
    for a in rng:
        for b in rng:
            for c in rng:
                for d in rng:
                    z = Cyc8(a, b, c, d)
                    if z.coeffs == (0, 0, 0, 0):
                        continue
                    norm = float(np.hypot(*embed_physical(z)))
                    if norm > 2.0:
                        continue
                    if autocorr_coefficient(scheme, z) < 0.3 * density:
                        continue
                    cands.append((norm, z.coeffs, z))
    cands.sort(key=lambda item: (item[0], item[1]))
    return [z for _, _, z in cands[:count]]


class ThreePointWitness(NamedTuple):
    z1: Cyc8
    z2: Cyc8
    estimate_1: float
    estimate_2: float
    difference: float
    variation_1: float
    variation_2: float


def _triple_volume(cells: np.ndarray, u: np.ndarray, v: np.ndarray) -> float:
    """vol(K ∩ (K-u) ∩ (K-v)) for the polyomino with the given cell centres."""
    total = None
    for axis in range(2):
        f = cells[:, axis][:, None, None]
        g = cells[:, axis][None, :, None] - u[axis]
        h = cells[:, axis][None, None, :] - v[axis]
        top = np.maximum(np.maximum(f, g), h)
        bot = np.minimum(np.minimum(f, g), h)
        seg = np.clip(1.0 - (top - bot), 0.0, None)
        total = seg if total is None else total * seg
    return float(total.sum())


def find_three_point_witness(
    patches_1: dict[float, ModelSetPatch],
    patches_2: dict[float, ModelSetPatch],
    base_radius: float = 50.0,
    coeff_range: int = 3,
    min_ratio: float = 5.0,
    top: int = 10,
) -> ThreePointWitness:
    """Locate (z1, z2) whose 3-point frequencies separate the two model sets.

    Candidate lags have coefficients in [-coeff_range, coeff_range], small
    physical norm and non-negligible pair frequency; pairs are ranked by the
    exact difference of window triple-overlap volumes, and the best-ranked
    pairs are verified against the estimator's variation across the supplied
    radii.  Raises :class:`WitnessNotFound` if none exceeds ``min_ratio``.
    """
    scheme_1 = patches_1[base_radius].scheme
    scheme_2 = patches_2[base_radius].scheme
    cells_1 = np.array(sorted(scheme_1.window.cells.points), dtype=np.float64)
    cells_2 = np.array(sorted(scheme_2.window.cells.points), dtype=np.float64)

    cands: list[tuple[Cyc8, np.ndarray]] = []
    rng = range(-coeff_range, coeff_range + 1)
    density = scheme_1.point_density
    for a in rng:
        for b in rng:
            for c in rng:
                for d in rng:
                    z = Cyc8(a, b, c, d)
                    if z.coeffs == (0, 0, 0, 0):
                        continue
                    if float(np.hypot(*embed_physical(z))) > 2.5:
                        continue
                    if autocorr_coefficient(scheme_1, z) < 0.2 * density:
                        continue
                    cands.append((z, embed_internal(z)))

    scored = []
    for i, (z1, u) in enumerate(cands):
        for z2, v in cands[i + 1:]:
            d1 = _triple_volume(cells_1, u, v)
            d2 = _triple_volume(cells_2, u, v)
            gap = abs(d1 - d2)
            if gap > 1e-9:
                scored.append((gap, z1, z2))
    scored.sort(key=lambda item: (-item[0], item[1].coeffs, item[2].coeffs))

    radii = sorted(patches_1)
    for _, z1, z2 in scored[:top]:
        e1 = {r: three_point_correlation(patches_1[r], z1, z2) for r in radii}
        e2 = {r: three_point_correlation(patches_2[r], z1, z2) for r in radii}
        var1 = max(e1.values()) - min(e1.values())
        var2 = max(e2.values()) - min(e2.values())
        diff = abs(e1[base_radius] - e2[base_radius])
        if diff > min_ratio * max(var1, var2):
            return ThreePointWitness(z1, z2, e1[base_radius], e2[base_radius], diff, var1, var2)
    raise WitnessNotFound("no 3-point discriminating pair found in the search set")
