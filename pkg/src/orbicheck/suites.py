"""Check suites and their shared, lazily built objects."""

from dataclasses import asdict, dataclass, fields
from fractions import Fraction
from pathlib import Path

import numpy as np

from . import characters as ch
from . import codes, f3, fusion, lattices, orders, orthogonal, twist
from .cache import cached_text
from .exact import QSeries
from .perm import PermGroup, orbit, orbit_and_stabilizer
from .report import Timer, VerificationReport, make_check

SUITES = ("codes", "lattice", "fusion", "extension", "orthogonal", "characters", "groups", "twistcoef")


@dataclass
class Config:
    order: int = 5  # character truncation, as a conformal weight
    enum_norm_bound: int = 4
    seed: int = 0
    cache: str = None
    sampled: bool = False
    sample_rows: int = 64
    twist_order: int = 8
    bsgs_confirm: int = 8

    def echo(self):
        return {k: v for k, v in asdict(self).items()}


class ConfigError(ValueError):
    pass


def _coerce(name, text):
    kinds = {f.name: f.type for f in fields(Config)}
    if name not in kinds:
        raise ConfigError(f"unknown config key {name!r}")
    kind = kinds[name]
    if kind in (int, "int"):
        try:
            return int(text)
        except ValueError:
            raise ConfigError(f"{name} must be an integer, got {text!r}") from None
    if kind in (bool, "bool"):
        low = str(text).strip().lower()
        if low in ("1", "true", "yes", "on"):
            return True
        if low in ("0", "false", "no", "off"):
            return False
        raise ConfigError(f"{name} must be a boolean, got {text!r}")
    return text


def parse_config_text(text):
    """Flat ``key = value`` lines; '#' starts a comment; dashes in keys become underscores."""
    out = {}
    for n, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"line {n}: expected key = value")
        key, value = (s.strip() for s in line.split("=", 1))
        key = key.replace("-", "_")
        out[key] = _coerce(key, value)
    return out


def make_config(overrides=None, text=None):
    values = parse_config_text(text) if text else {}
    values.update({k: v for k, v in (overrides or {}).items() if v is not None})
    cfg = Config(**values)
    if cfg.order < 1:
        raise ConfigError("order must be at least 1")
    if not 0 <= cfg.twist_order <= twist.MAX_ORDER:
        raise ConfigError(f"twist_order must lie in 0..{twist.MAX_ORDER}")
    if not 4 <= cfg.enum_norm_bound <= lattices.ENUM_NORM_CAP:
        raise ConfigError(f"enum_norm_bound must lie in 4..{lattices.ENUM_NORM_CAP}")
    return cfg


class Context:
    """Shared objects, built once per run."""

    def __init__(self, config):
        self.config = config
        self._store = {}

    def get(self, name, builder):
        if name not in self._store:
            self._store[name] = builder()
        return self._store[name]

    def cache_path(self, sub, name):
        return Path(self.config.cache) / sub / name if self.config.cache else None

    @property
    def leech(self):
        return self.get("leech", lattices.leech)

    @property
    def ring(self):
        return self.get("ring", fusion.FusionRing)

    @property
    def geometry(self):
        from .extension import ExtensionGeometry
        return self.get("geometry", lambda: ExtensionGeometry(self.ring, self.leech))

    @property
    def rspace(self):
        return self.get("rspace", lambda: orthogonal.QuadSpaceF3(self.ring.gram()))


def _timed(fn):
    """Run fn() -> (computed, expected[, ok]) and stamp the elapsed time."""
    with Timer() as t:
        res = fn()
    return res, t.ms


def _check(id, desc, ref, fn):
    res, ms = _timed(fn)
    computed, expected = res[0], res[1]
    ok = res[2] if len(res) > 2 else None
    return make_check(id, desc, ref, computed, expected, ok, ms)


# --- codes ----------------------------------------------------------------------

def suite_codes(ctx):
    d, h, c = codes.ternary_d(), codes.hexacode(), codes.glue_code_c()
    eps_s3 = codes.swap_halves_map(12, "F3")
    eps_s4 = codes.swap_halves_map(12, "F4")
    return [
        _check("codes-D-size", "|D| by enumeration", "D is a 6-dimensional ternary code of length 12",
               lambda: (d.size, 729)),
        _check("codes-D-minweight", "minimum nonzero weight of D", "D is a sum of three tetracodes",
               lambda: (d.min_weight(), 3)),
        _check("codes-D-selforth", "D is self-orthogonal", "D is self-dual", lambda: (is_so(d), True)),
        _check("codes-H-params", "hexacode size and minimum weight", "hexacode [6,3,4] over F4",
               lambda: ((h.size, h.min_weight()), (64, 4))),
        _check("codes-H-trace", "Hermitian trace products vanish on H", "hexacode is Hermitian self-dual",
               lambda: (int(codes.hermitian_trace_products(h).any()), 0)),
        _check("codes-D-invariant", "D is invariant under eps s", "eps s stabilises D",
               lambda: (codes.is_invariant(d, eps_s3), True)),
        _check("codes-C-invariant", "C = H + H is invariant under eps s and swaps its halves",
               "eps s stabilises C and transposes its two hexacode halves",
               lambda: ((codes.is_invariant(c, eps_s4), swaps_halves(h, eps_s4)), (True, True))),
    ]


def is_so(code):
    return codes.is_self_orthogonal_f3(code)


def swaps_halves(h, m):
    z = (0,) * 6
    for w in h.words():
        w = tuple(int(t) for t in w)
        if m.apply_word(w + z) != z + w or m.apply_word(z + w) != w + z:
            return False
    return True


# --- lattice ----------------------------------------------------------------------

def _leech_theta(ctx, order):
    return cached_text(ctx.cache_path("theta", f"leech_{order}.txt"),
                       lambda: lattices.theta_series(ctx.leech, order), QSeries.from_text, QSeries.to_text)


def suite_lattice(ctx):
    cfg = ctx.config
    out = []
    lam = ctx.leech
    bound = cfg.enum_norm_bound
    out.append(_check("lat-leech-even-unimodular", "Leech lattice: det and evenness",
                      "Lambda is even unimodular", lambda: ((lam.det(), lam.is_even()), (1, True))))
    sv = {}

    def short():
        sv.update(lattices.short_vectors(lam, bound))
        return min(sv), 4

    out.append(_check("lat-leech-min", f"minimum norm of Lambda (norms <= {bound})",
                      "Lambda has no roots", short))
    oracle = ch.leech_theta_oracle(Fraction(bound, 2))
    expected = {Fraction(2 * e): c for e, c in oracle.items() if e > 0 and c}
    out.append(_check("lat-leech-theta", f"norm counts of Lambda up to {bound} against E4^3 - 720 Delta",
                      "theta series of Lambda is E4^3 - 720 Delta",
                      lambda: (sv, expected)))
    out.append(_check("lat-leech-norm4", "number of norm-4 vectors", "196560 minimal vectors",
                      lambda: (sv.get(Fraction(4)), 196560)))
    lc = lattices.lattice_lc()
    out.append(_check("lat-index-LC", "[Lambda : K12 + K12]", "index 3^6 of the orthogonal sum",
                      lambda: (lc.index_in(lam), 729)))
    k = lattices.k12()
    out.append(_check("lat-k12-det", "det K12", "det K12 = 3^6", lambda: (k.det(), 729)))
    out.append(_check("lat-k12-invariants", "invariant factors of K12*/K12",
                      "K12*/K12 is elementary abelian of order 3^6",
                      lambda: (lattices.invariant_factors(k), (3,) * 6)))

    def k12_short():
        c = lattices.fincke_pohst_counts(lattices.GramLattice(k.basis), 4)
        c.pop(Fraction(0), None)
        return (min(c), c.get(Fraction(4))), (4, 756)

    out.append(_check("lat-k12-short", "minimum and norm-4 count of K12 by Fincke-Pohst",
                      "K12 has minimum 4 and 756 minimal vectors", k12_short))
    tau = lattices.build_tau(12)
    out.append(_check("lat-tau", "tau preserves Lambda and has order 3 without fixed vectors",
                      "fixed-point-free isometry of order 3",
                      lambda: ((tau.preserves(lam), tau.power(3).is_identity(), tau.fixed_space_dim()),
                               (True, True, 0))))
    out.append(_check("lat-tau-discriminant", "(1 - tau) K12* lies in K12",
                      "tau acts trivially on K12*/K12",
                      lambda: (lattices.tau_trivial_on_discriminant(k, lattices.build_tau(6)), True)))
    out += suite_perk12(ctx)
    return out


def suite_perk12(ctx):
    lam = ctx.leech
    h = lattices.build_h(12)
    tau = lattices.build_tau(12)
    lc = lattices.lattice_lc()
    k0, k1 = lattices.k12(0), lattices.k12(1)
    d, c = codes.ternary_d(), codes.glue_code_c()
    return [
        _check("perk12-h-leech", "h = eps s preserves Lambda", "h is an automorphism of Lambda",
               lambda: ((h.preserves_form(), h.preserves(lam)), (True, True))),
        _check("perk12-h-lc", "h preserves K12 + K12", "h stabilises L_C", lambda: (h.preserves(lc), True)),
        _check("perk12-h-swap", "h maps each K12 copy onto the other", "h swaps the two copies of K12",
               lambda: ((h.image(k0) == k1, h.image(k1) == k0), (True, True))),
        _check("perk12-h-tau", "h tau = tau h", "h commutes with tau",
               lambda: (((h @ tau).matrix == (tau @ h).matrix).all(), True)),
        _check("perk12-codes", "D and C invariant under eps s", "eps s stabilises D and C",
               lambda: ((codes.is_invariant(d, codes.swap_halves_map(12, "F3")),
                         codes.is_invariant(c, codes.swap_halves_map(12, "F4"))), (True, True))),
    ]


# --- fusion -----------------------------------------------------------------------

def suite_fusion(ctx):
    cfg = ctx.config
    ring = ctx.ring
    rows = cfg.sample_rows if cfg.sampled else None
    mode = f"sampled: {rows} random first labels against all 6561" if rows else "exhaustive"
    rng = lambda: np.random.default_rng(cfg.seed)  # noqa: E731
    disc = ring.disc
    qk = disc.qform()

    def triple():
        bad = 0
        for v in ring.vectors:
            m = fusion.ModuleLabel.from_vector(v)
            if fusion.fuse(m, fusion.fuse(m, m)) != fusion.IDENTITY:
                bad += 1
        return bad, 0

    return [
        _check("fus-labels", "number of distinct module labels", "3^8 irreducible modules",
               lambda: (len({fusion.ModuleLabel.from_vector(v).index() for v in ring.vectors}), 6561)),
        _check("fus-vector-addition", f"fusion rules agree with vector addition ({mode})",
               "fusion group is elementary abelian of order 3^8",
               lambda: (fusion.check_fusion_is_vector_addition(ring, rows, rng()), 0)),
        _check("fus-exponent3", "M x M x M = identity for every label", "every module has order dividing 3",
               triple),
        _check("fus-commutative", f"fusion is commutative ({mode})", "fusion is commutative",
               lambda: (fusion.check_commutative(ring, rows, rng()), 0)),
        _check("fus-quadratic", "q is a quadratic form with matrix G", "conformal weights mod 1 give a quadratic form",
               lambda: (fusion.check_q_is_quadratic(ring), 0)),
        _check("fus-bilinearity", f"bilinearity: closed B = polar of q = G ({mode})",
               "B is the bilinear form of q",
               lambda: (fusion.check_bilinear(ring, rows, rng()), 0)),
        _check("fus-nondegenerate", "radical of B", "B is non-degenerate",
               lambda: (len(fusion.radical(ring)), 0)),
        _check("fus-singular", "nonzero singular labels", "q is of minus type: 2132 nonzero singular vectors",
               lambda: (len(ring.singular_vectors()), orders.singular_vector_count(4, 3, "minus"))),
        _check("fus-decomposition", "{S^a[0]} is orthogonal to <S^0[1], T^0[2;1]>; nonzero singular counts (2-dim, 6-dim)",
               "R splits as a 6-dimensional minus-type space plus a hyperbolic plane",
               lambda: (decomposition(ring), (True, 4, 224))),
        _check("fus-k12-minus", "q_K12 on 729 cosets: nonzero singular count",
               "K12*/K12 with 3|a|^2 mod 3 is of minus type (224 nonzero singular)",
               lambda: (int((qk == 0).sum()) - 1, orders.singular_vector_count(3, 3, "minus"))),
    ]


def decomposition(ring):
    s_part = np.hstack([f3.all_vectors(6), np.zeros((729, 2), dtype=np.int64)])
    plane = np.array([fusion.ModuleLabel.S((0,) * 6, 1).to_vector(),
                      fusion.ModuleLabel.T((0,) * 6, 2, 1).to_vector()])
    orth = not ((s_part @ ring.gram() @ plane.T) % 3).any()
    plane_sing = int((ring.q_vectors(f3.span(plane)) == 0).sum()) - 1
    six_sing = int((ring.q_vectors(s_part) == 0).sum()) - 1
    return orth, plane_sing, six_sing


# --- extension ----------------------------------------------------------------------

def suite_extension(ctx):
    geo_box = {}

    def geo():
        geo_box["g"] = ctx.geometry
        return (geo_box["g"].G6.dim, geo_box["g"].g6_isotropic(), geo_box["g"].g6_self_dual()), (6, 0, True)

    out = [_check("ext-G6", "G6: dimension, isotropy, self-duality", "glue of Lambda over K12 + K12", geo)]
    g = geo_box["g"]
    out += [
        _check("ext-U", "|U| and dim U-perp", "U of order 3^7", lambda: ((g.U.size, g.Uperp.dim), (3 ** 7, 9))),
        _check("ext-U-singular", "U is totally singular", "U is totally singular",
               lambda: (g.is_totally_singular(g.U), True)),
        _check("ext-two-extensions", "maximal totally singular subspaces containing U",
               "exactly two extensions of U", lambda: (len(g.lines), 2)),
        _check("ext-SLambda", "S_Lambda is the S-type part of U-perp, order 3^8",
               "one extension is S_Lambda",
               lambda: ((g.SLambda.size, len(g.s_type_of_uperp())), (6561, 6561))),
        _check("ext-Ssharp-order", "|S#|", "|S#| = 3^8", lambda: (g.Ssharp.size, 6561)),
        _check("ext-graph", "every label has exactly one S# partner", "S# is the graph of eta",
               lambda: (set(g.graph_partners().tolist()), {1})),
        _check("ext-eta-q", "labels with q(eta M) != -q(M)", "eta negates q",
               lambda: (g.eta_q_check(), 0)),
        _check("ext-twist", "S# outside U: count and T-type equal-twist count",
               "elements of S# outside U pair twisted modules of equal twist",
               lambda: (g.twist_pattern(), (4374, 4374))),
        _check("ext-phi", "level sizes of phi_{S^0[1]} on S#, level 0 = U",
               "the three-coset grading of S#",
               lambda: (g.phi_levels(fusion.ModuleLabel.S((0,) * 6, 1)), ([2187] * 3, True))),
        _check("ext-h", "h acts on labels preserving G6 and U", "h swaps the two K12 copies",
               lambda: (g.h_label_action_check()[0], True)),
    ]
    ns = 8 if ctx.config.sampled else 20
    rng = np.random.default_rng(ctx.config.seed)
    space = ctx.rspace

    def pair_maps():
        bad = 0
        for _ in range(ns):
            r = orthogonal.reflection(space, orthogonal.random_anisotropic(space, rng))
            bad += not g.pair_map_preserves(r)
        return bad, 0

    out.append(_check("ext-pair-map", f"(g, eta^-1 g eta) preserves S# for {ns} random reflections",
                      "O(R, q) acts on S# through eta", pair_maps))
    return out


# --- orthogonal ---------------------------------------------------------------------

def _bsgs(ctx, name, build):
    return cached_text(ctx.cache_path("bsgs", f"{name}.txt"), build, PermGroup.from_text, PermGroup.to_text)


def suite_orthogonal(ctx):
    cfg = ctx.config
    space = ctx.rspace
    seed = cfg.seed
    out = []
    small = []
    with Timer() as t:
        for n, kind in ((2, "plus"), (2, "minus"), (3, None), (4, "plus"), (4, "minus"), (5, None), (6, "minus")):
            sp = orthogonal.standard_space(n, kind)
            grp, _ = orthogonal.build_orthogonal_group(sp, seed, cfg.bsgs_confirm)
            small.append((grp.order(), int(orders.orthogonal_group_order(n, 3, kind))))
    out.append(make_check("orth-small", "BSGS orders of O_n(3), n <= 6, against closed forms",
                          "order formulas for finite orthogonal groups",
                          [a for a, _ in small], [b for _, b in small], runtime_ms=t.ms))
    with Timer() as t:
        grp = _bsgs(ctx, "O_R", lambda: orthogonal.build_orthogonal_group(space, seed, cfg.bsgs_confirm)[0])
    omega_order = orders.omega_minus_8_3().value
    out.append(make_check("orth-order", "BSGS order of O(R, q)", "O(R, q) = O^-_8(3)",
                          grp.order(), int(orders.orthogonal_order(4, 3, "minus")), runtime_ms=t.ms))
    with Timer() as t:
        om = _bsgs(ctx, "Omega_R", lambda: orthogonal.build_omega(space, seed, cfg.bsgs_confirm)[0])
    out.append(make_check("orth-omega-index", "|O : Omega|", "Omega has index 4",
                          f"{grp.order()}/{om.order()}", f"{grp.order()}/{omega_order}",
                          ok=om.order() * 4 == grp.order(), runtime_ms=t.ms))
    mi = orthogonal.matrix_to_perm(space, orthogonal.minus_identity(space))
    out.append(_check("orth-minus-one", "-1 lies in O but not in Omega", "-1 is not in Omega^-_8(3)",
                      lambda: ((grp.contains(mi), om.contains(mi)), (True, False))))
    sing = np.nonzero(space.qvalues == 0)[0]
    sing = sing[sing != 0]
    out.append(_check("orth-transitive", "orbit of O on nonzero singular vectors",
                      "O is transitive on 2132 singular vectors",
                      lambda: ((len(orbit(grp.strong_generators(), int(sing[0]))), len(sing)), (2132, 2132))))

    hbox = {}

    def hgroup():
        rng = np.random.default_rng(seed + 1)
        v = orthogonal.random_anisotropic(space, rng)
        gens = om.strong_generators() + [orthogonal.matrix_to_perm(space, orthogonal.reflection(space, v))]
        hg = hbox["h"] = PermGroup(len(space.vectors), gens, orthogonal.base_hint(space), seed=seed)
        classes = orthogonal.singular_line_classes(space)
        size, stab = orbit_and_stabilizer(hg, int(sing[0]), classes)
        return ((hg.order(), size, stab),
                (2 * omega_order, 1066, 729 * 8 * orders.PSU4_3.value))

    out.append(_check("orth-line-stabilizer", "<Omega, reflection>: order, singular-line orbit, stabiliser",
                      "2|Omega^-_8(3)| = 1066 * 3^6 * 8|PSU4(3)|", hgroup))
    out.append(_check("orth-direct-product", "-1 is not in H = <Omega, reflection>, so O = {+-1} x H",
                      "O(R, q) is the centre times a complement of order 2|Omega|",
                      lambda: ((hbox["h"].contains(mi), 2 * hbox["h"].order() == grp.order()), (False, True))))

    def spinor():
        rng = np.random.default_rng(seed + 2)
        seen = set()
        bad = 0
        for _ in range(12 if cfg.sampled else 24):
            k1, k2 = rng.integers(1, 5, 2)
            g1 = orthogonal.product_of_reflections(space, [orthogonal.random_anisotropic(space, rng) for _ in range(k1)])
            g2 = orthogonal.product_of_reflections(space, [orthogonal.random_anisotropic(space, rng) for _ in range(k2)])
            a, b = orthogonal.dickson_spinor(space, g1), orthogonal.dickson_spinor(space, g2)
            c = orthogonal.dickson_spinor(space, (g1 @ g2) % 3)
            if c != ((a[0] + b[0]) % 2, (a[1] + b[1]) % 2):
                bad += 1
            seen.update((a, b, c))
        return (bad, len(seen)), (0, 4)

    out.append(_check("orth-dickson-spinor", "Dickson and spinor invariants multiply; all four values occur",
                      "O / Omega = 2 x 2", spinor))
    out.append(_check("orth-preserves-q", "every strong generator of O preserves q",
                      "generators are isometries",
                      lambda: (all(orthogonal.preserves_q(space, g) for g in grp.strong_generators()), True)))
    return out


# --- characters -------------------------------------------------------------------

def suite_characters(ctx):
    cfg = ctx.config
    top = cfg.order - 1  # highest q-exponent
    out = []
    with Timer() as t:
        theta = _leech_theta(ctx, top + 1)
    out.append(make_check("ch-theta-oracle", f"theta of Lambda up to q^{top + 1} equals E4^3 - 720 Delta",
                          "Lambda has theta series E4^3 - 720 Delta",
                          theta.with_trunc(top + 1), ch.leech_theta_oracle(top + 1), runtime_ms=t.ms))
    with Timer() as t:
        comp = ch.ch_vsharp_components(top, theta)
        j = ch.cached_series(cfg.cache, f"j_{top}", lambda: ch.j_series(top))
    total = comp.total
    out.append(make_check("ch-Vsharp-J", f"ch V# equals J term by term up to q^{top}",
                          "ch V# = J(q)", total, j, runtime_ms=t.ms))
    for e, exp, ident in ((-1, 1, "qm1"), (0, 0, "q0"), (1, 196884, "q1"), (2, 21493760, "q2")):
        if e <= top:
            out.append(make_check(f"ch-Vsharp-{ident}", f"coefficient of q^{e} in ch V#",
                                  "graded dimensions of V#", total[e], exp))
    if top >= 1:
        out.append(make_check("ch-components-q1", "fixed and twisted parts at q^1", "196884 = 65664 + 2 * 65610",
                              (comp.fixed[1], comp.twisted_integral[1]), (65664, 65610)))
    low = min((e for e, c in comp.twisted_integral.items() if c), default=None)
    out.append(make_check("ch-twisted-lowest", "lowest weight of the integral twisted part",
                          "the twisted parts have lowest weight 2",
                          None if low is None else low + 1, 2))
    lp = ch.LEECH_PROFILE
    with Timer() as t:
        frac_top = Fraction(top)
        eta_tw = ch.eta_quotient(ch.EtaQuotientSpec(((1, 12), (Fraction(1, 3), -12))), frac_top)
        fock = ch.fock_character(lp, frac_top)
    out.append(make_check("ch-fock-twisted", "eta(q)^12 / eta(q^(1/3))^12 against the twisted Fock count",
                          "twisted-sector character is an eta quotient", eta_tw, fock, runtime_ms=t.ms))
    with Timer() as t:
        tr = ch.tau_trace_oracle(top)
    out.append(make_check("ch-tau-trace", "eta(q)^12 / eta(q^3)^12 against the expanded tau-trace",
                          "trace of tau on V_Lambda", comp.tau_trace, tr, runtime_ms=t.ms))
    out.append(make_check("ch-defect", "sqrt det(1 - tau) on Lambda", "twisted module multiplicity 3^6",
                          ch.defect_factor(lattices.build_tau(12).matrix), 729))
    out.append(make_check("ch-fock-brute", "brute-force twisted Fock count at level 2 against the knapsack",
                          "twisted Fock space dimensions",
                          ch.fock_enumerate(lp, 2), ch.fock_counts(lp, 3)[2]))
    return out


# --- groups, twist ---------------------------------------------------------------------

def suite_groups(ctx):
    return orders.shape_arithmetic_suite() + orders.dimension_sums()


def suite_twistcoef(ctx):
    n = ctx.config.twist_order
    with Timer() as t:
        c = [twist.compute_cmn(i, n) for i in range(3)]
    keys = c[0].keys()
    out = [
        make_check("tw-c00", f"c^i_00 for i = 0, 1, 2 at N = {n}", "c^i_00 = 0",
                   [str(x[(0, 0)]) for x in c], [str(twist.CycRational(0))] * 3, runtime_ms=t.ms),
        make_check("tw-conj", "conj(c^1) = c^2", "the i = 1, 2 generating functions are conjugate",
                   c[1].conj() == c[2], True),
        make_check("tw-real", "c^0 has no xi-component", "c^0 is real",
                   all(c[0][k].is_real() for k in keys), True),
        make_check("tw-symmetric", "c^0_mn = c^0_nm", "c^0 is symmetric in (m, n)",
                   c[0].swap() == c[0], True),
    ]
    if n < twist.MAX_ORDER:
        with Timer() as t:
            bigger = twist.compute_cmn(1, n + 1).truncate(n)
        out.append(make_check("tw-stable", f"order {n + 1} truncated to {n} reproduces order {n}",
                              "coefficient stability", bigger == c[1], True, runtime_ms=t.ms))
    return out


RUNNERS = {
    "codes": suite_codes,
    "lattice": suite_lattice,
    "fusion": suite_fusion,
    "extension": suite_extension,
    "orthogonal": suite_orthogonal,
    "characters": suite_characters,
    "groups": suite_groups,
    "twistcoef": suite_twistcoef,
}


def run(suite, config=None):
    """Run ``suite`` (a name from SUITES or 'all') and return a VerificationReport."""
    config = config or Config()
    if suite == "all":
        names = list(SUITES)
    elif suite in RUNNERS:
        names = [suite]
    else:
        raise ConfigError(f"unknown suite {suite!r}")
    ctx = Context(config)
    report = VerificationReport(configEcho=dict(config.echo(), suite=suite))
    for name in names:
        report.extend(RUNNERS[name](ctx))
    return report
