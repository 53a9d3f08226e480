"""Command-line interface: verify charts, build embeddings, run q=1 checks."""

import argparse
import sys

from .reports import VerificationReport


def _report_verify_symbolic(n):
    from .charts import (
        build_full,
        build_upper,
        coproduct_stability_check,
        entry_closed_form,
        verify_glq2_relations,
        verify_row_order_independence,
    )
    from .cluster import ratio_chart, verify_cluster_commutation

    rep = VerificationReport("verify-symbolic", {"n": n})
    chart, Z = build_upper(n)
    res = verify_glq2_relations(Z)
    rep.add("upper chart minor relations", res["pass"], n_checks=res["n_checks"])

    closed = all(
        entry_closed_form(chart, i, j) == Z[i, j]
        for i in range(1, n + 1)
        for j in range(1, n + 1)
    )
    rep.add("closed-form entries match the factorization", closed)

    fchart, fZ = build_full(n)
    fres = verify_glq2_relations(fZ)
    rep.add("full chart minor relations", fres["pass"], n_checks=fres["n_checks"])

    rep.add(
        "quantum determinant row-order independence",
        verify_row_order_independence(
            fZ, range(1, n + 1), list(range(1, n + 1))
        )["pass"],
    )
    rep.add("coproduct stability", coproduct_stability_check(n)["pass"])

    cl = verify_cluster_commutation(n)
    rep.add(
        "cluster monomial commutation exponents",
        cl["pass"],
        n_pairs=cl["n_checks"],
    )
    rep.add("ratio chart relations", ratio_chart(chart)[2]["pass"])
    return rep


def _report_verify_numeric(n, dim, word):
    from .numeric import ReducedWord, reduced_words, word_chart

    rep = VerificationReport("verify-numeric", {"n": n, "dim": dim})
    if word:
        words = [ReducedWord(n, tuple(int(c) for c in word))]
    else:
        words = reduced_words(n)
    for w in words:
        res = word_chart(w, dim)
        rep.add(
            "word " + "".join(str(c) for c in res["word"]),
            res["pass"],
            max_rounding_deviation=res["max_rounding_deviation"],
            max_commutation_residual=res["max_commutation_residual"],
            minor_residual=res["minor_residual"],
        )
    return rep


def _report_verify_braid(dim, samples, seed):
    from .numeric import braid_phi_report

    rep = VerificationReport(
        "verify-braid", {"dim": dim, "samples": samples, "seed": seed}
    )
    res = braid_phi_report(dim, samples=samples, seed=seed)
    for name, val in res["residuals"].items():
        rep.add(f"braid postcondition: {name}", val <= 1e-9,
                worst_residual=float(val))
    return rep


def _report_embed(n, mode):
    from .charts import folded_chart, full_chart, upper_chart
    from .tori import (
        commutation_rank,
        full_embedding,
        minimal_embedding,
        reduced_embedding,
        symplectic_reduce,
        upper_embedding,
    )

    builders = {
        "upper": (upper_chart, upper_embedding),
        "full": (full_chart, full_embedding),
        "folded": (folded_chart, reduced_embedding),
    }
    chart_fn, embed_fn = builders[mode]
    rep = VerificationReport("embed", {"n": n, "mode": mode})

    f = embed_fn(n)
    rep.add(
        "torus embedding preserves commutation",
        f.check()["pass"],
        n_generators=len(f.source.names),
        n_pairs=f.target.names and sum(
            1 for name in f.target.names if name.startswith("u")
        ),
    )

    chart = chart_fn(n)
    red = symplectic_reduce(chart.sig.C)
    rep.add(
        "integer symplectic reduction certificate",
        red.verify(),
        rank=red.rank,
        min_tori=red.rank // 2,
        kernel_dim=red.kernel_dim,
        divisors=list(red.divisors),
    )
    rank, min_tori, kdim = commutation_rank(chart.sig)
    g = minimal_embedding(chart.sig)
    rep.add(
        "minimal torus embedding",
        g.check()["pass"],
        min_tori=min_tori,
        central=kdim,
    )
    return rep


def _report_classical(n, samples, seed):
    import numpy as np

    from .classical import (
        PositiveParam,
        haar_density_check,
        initial_minors_classical,
        lusztig_matrix,
        params_from_minors,
    )

    rep = VerificationReport(
        "classical", {"n": n, "samples": samples, "seed": seed}
    )
    rng = np.random.default_rng(seed)
    worst = 0.0
    min_minor = float("inf")
    for _ in range(samples):
        p = PositiveParam.random(n, rng)
        x = initial_minors_classical(lusztig_matrix(p))
        min_minor = min(min_minor, min(x.values()))
        q = params_from_minors(x, n)
        worst = max(
            worst,
            float(np.max(np.abs(p.vector() - q.vector()) / np.abs(p.vector()))),
        )
    rep.add("factorization round-trip", worst < 1e-9, worst_rel_err=worst)
    rep.add("total positivity of initial minors", min_minor > 0.0,
            min_minor=min_minor)

    hd = haar_density_check(n, samples=min(samples, 50), seed=seed)
    rep.add(
        "parameter measure matches ratio-coordinate measure",
        hd["cross_constant"],
        spread=hd["cross_ratio_spread"],
    )
    rep.add(
        "modular-corrected measure matches group Haar measure",
        hd["corrected_constant"],
        spread=hd["corrected_ratio_spread"],
    )
    rep.add(
        "uncorrected measure differs from group Haar measure",
        not hd["literal_constant"],
        spread=hd["literal_ratio_spread"],
    )
    return rep


def build_parser():
    p = argparse.ArgumentParser(
        prog="glq",
        description="Charts of the quantum general linear group: "
        "symbolic verification, torus embeddings, numeric and "
        "classical cross-checks.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="verify chart relations")
    v.add_argument("--n", type=int, default=3, help="matrix size N")
    v.add_argument(
        "--mode",
        choices=("symbolic", "numeric", "braid"),
        default="symbolic",
    )
    v.add_argument("--word", help="reduced word digits, e.g. 212")
    v.add_argument("--dim", type=int, default=7,
                   help="root-of-unity order for numeric modes")
    v.add_argument("--samples", type=int, default=100)
    v.add_argument("--seed", type=int, default=0)

    e = sub.add_parser("embed", help="embed a chart into quantum tori")
    e.add_argument("--n", type=int, default=3)
    e.add_argument("--mode", choices=("upper", "full", "folded"),
                   default="upper")

    c = sub.add_parser("classical", help="q = 1 floating-point checks")
    c.add_argument("--n", type=int, default=3)
    c.add_argument("--samples", type=int, default=100)
    c.add_argument("--seed", type=int, default=0)

    for s in (v, e, c):
        s.add_argument("--format", choices=("json", "text"), default="text")
        s.add_argument("--out", help="write the report to a file")
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        if args.command == "verify":
            if args.mode == "symbolic":
                rep = _report_verify_symbolic(args.n)
            elif args.mode == "numeric":
                rep = _report_verify_numeric(args.n, args.dim, args.word)
            else:
                rep = _report_verify_braid(args.dim, args.samples, args.seed)
        elif args.command == "embed":
            rep = _report_embed(args.n, args.mode)
        else:
            rep = _report_classical(args.n, args.samples, args.seed)
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    text = rep.to_json() if args.format == "json" else rep.render_text()
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return 0 if rep.passed else 1


if __name__ == "__main__":
    sys.exit(main())
