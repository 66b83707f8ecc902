"""Staged verification, the full check suite, and doubles as files."""

from __future__ import annotations

from .bialgebra import Kind, QuasitriangularBialgebra, act_on_tensor, bialgebra_checks, classify, cybe_tensor
from .double import build_direct_double, lemma_checks, verify_manin_triple
from .embedding import cayley_checks, g_image, gstar_image, verify_gstar_image
from .extension import build_double_as_extension, exactness_report, extension_checks, iso_matrix
from .fileio import BialgebraFile, from_dict, to_dict, vectors_from_json, vectors_json
from .lie import LieAlgebra, validate
from .linalg import LinearMap, Tensor2, unit, zeros
from .report import Report
from .special import (
    dual_number_double, manin_triple_jjstar, quasi_frobenius_report, verify_factorizable,
    verify_triangular,
)

MODELS = ("direct", "extension")


def verify_stage(g: LieAlgebra, r: Tensor2):
    """Lie axioms, then CYBE, then ad-invariance of Omega; stops at the first failing stage.

    Returns (report, bialgebra or None).  Builds nothing beyond the bialgebra itself.
    """
    rep = Report("verify")
    v = validate(g)
    rep.add("Lie algebra axioms (antisymmetry and Jacobi)", v.ok,
            antisymmetry=list(v.antisymmetry[:10]), jacobi=list(v.jacobi[:10]),
            summary=v.describe())
    if not v.ok:
        return rep, None
    n = g.dim
    if r.shape != (n, n) and n:
        rep.add("r has shape dim x dim", False, shape=r.shape)
        return rep, None
    T = cybe_tensor(g, r)
    nz = T.nonzero_entries()
    rep.add("classical Yang-Baxter equation", not nz,
            first_nonzero_entry=list(nz[0][0]) if nz else None,
            value=nz[0][1] if nz else None)
    if nz:
        return rep, None
    omega = r + r.transpose()
    bad = [g.basis_names[i] for i in range(n)
           if any(any(row) for row in act_on_tensor(g, unit(n, i), omega.entries))]
    rep.add("r + r_21 is ad-invariant", not bad, failures=bad)
    if bad:
        return rep, None
    B = QuasitriangularBialgebra(g, r)
    rep.add("classification", True, kind=classify(B).value)
    return rep, B


def check_all(B: QuasitriangularBialgebra, form=None) -> Report:
    """Every invariant of every module, aggregated."""
    rep = Report("check")
    rep.extend(bialgebra_checks(B))
    D = build_direct_double(B)
    rep.extend(verify_manin_triple(D))
    rep.extend(lemma_checks(D))
    rep.extend(exactness_report(B, D))
    E = build_double_as_extension(B)
    rep.extend(extension_checks(E, D))
    rep.extend(cayley_checks(B))
    rep.extend(verify_gstar_image(E))
    kind = classify(B)
    if kind == Kind.FACTORIZABLE:
        rep.extend(verify_factorizable(B))
    elif kind == Kind.TRIANGULAR:
        rep.extend(verify_triangular(B))
        rep.extend(manin_triple_jjstar(B))
        rep.extend(quasi_frobenius_report(B))
        if form is not None:
            rep.extend(dual_number_double(B, form))
    for model in MODELS:
        f = double_file(B, model)
        rep.add(f"{model} double file re-parses to identical data", from_dict(to_dict(f)) == f)
    rep.extend(check_double_files(double_file(B, "direct"), double_file(B, "extension")))
    return rep


def _rows_of(n, idx):
    return [unit(n, i) for i in idx]


def double_file(B: QuasitriangularBialgebra, model: str) -> BialgebraFile:
    """The chosen double as a file: structure constants plus chart metadata."""
    n = B.n
    N = 2 * n
    g = B.g
    if model == "direct":
        D = build_direct_double(B)
        L = D.d
        blocks = {
            "g": vectors_json(_rows_of(N, range(n))),
            "f": vectors_json([tuple(v) + zeros(n) for v in B.f.rows]),
            "f_perp": vectors_json([zeros(n) + tuple(v) for v in B.f_perp.rows]),
            "gstar_image": vectors_json(_rows_of(N, range(n, N))),
        }
        chart = {"model": "direct", "source": g.name, "n": n,
                 "basis_order": "e_1..e_n, then the dual basis", "blocks": blocks}
    elif model == "extension":
        E = build_double_as_extension(B)
        L = E.ext.total
        m = E.m
        alpha = {}
        for i in range(n + m):
            for j in range(i + 1, n + m):
                terms = [[k, str(v)] for k, v in enumerate(E.alpha[i][j]) if v]
                if terms:
                    alpha[f"{i},{j}"] = terms
        blocks = {
            "g": vectors_json(g_image(E).rows),
            "f": vectors_json(_rows_of(N, range(n, n + m))),
            "f_perp": vectors_json(_rows_of(N, range(n + m, N))),
            "gstar_image": vectors_json(gstar_image(E).rows),
        }
        chart = {"model": "extension", "source": g.name, "n": n, "dim_f": m,
                 "basis_order": "diagonal (e_i, e_i), then (0, f_j), then the f_perp basis",
                 "blocks": blocks,
                 "f_basis": vectors_json(B.f.rows),
                 "f_perp_basis": vectors_json(B.f_perp.rows),
                 "alpha": alpha,
                 "iso_from_direct": vectors_json(iso_matrix(E).matrix)}
    else:
        raise ValueError(f"unknown model {model!r}; expected one of {MODELS}")
    return BialgebraFile(f"D({g.name}) [{model}]", L.basis_names, L.c,
                         tuple(zeros(N) for _ in range(N)), None, chart)


def check_double_files(direct: BialgebraFile, ext: BialgebraFile) -> Report:
    """The iso stored in the extension file carries the direct brackets onto the extension brackets."""
    rep = Report("direct and extension files")
    N = direct.dim
    ok_models = ((direct.chart or {}).get("model") == "direct"
                 and (ext.chart or {}).get("model") == "extension")
    rep.add("files declare the direct and extension models", ok_models)
    if not ok_models or ext.dim != N:
        rep.add("dimensions agree", ext.dim == N)
        return rep
    M = vectors_from_json(ext.chart.get("iso_from_direct"), "chart.iso_from_direct")
    if len(M) != N or any(len(r) != N for r in M):
        rep.add("iso matrix has shape dim x dim", False)
        return rep
    iso = LinearMap("D", "E", N, N, M)
    rep.add("iso is invertible", iso.rank() == N)
    Ld, Le = direct.lie("D"), ext.lie("E")
    bad = [(a, b) for a in range(N) for b in range(a + 1, N)
           if iso.apply(Ld.c[a][b]) != Le.bracket_coords(iso.column(a), iso.column(b))]
    rep.add("iso carries the direct bracket to the extension bracket", not bad, failures=bad)
    return rep
