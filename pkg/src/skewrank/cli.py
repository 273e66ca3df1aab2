"""Command-line interface.

Exit codes: 0 when the property holds (or the certificate is valid), 1 when
it fails (a witness is printed), 2 on input or usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import kernels
from .counterexamples import (
    REMARK2_CERTIFICATE,
    remark1_validate,
    remark2_matrix,
)
from .errors import ParseError, SkewRankError
from .evenrank import DEFAULT_MAX_N, check_all_principal_even
from .field import Q, parse_field
from .formats import format_certificate, format_matrix, parse_certificate, read_matrix
from .lemma import LemmaParams, build_lemma_matrix, lemma_parity_predicate
from .matrix import guttman_check, is_skew_symmetric, rank, scale, schur_complement
from .recognizer import apply_certificate, recognize_general_scaling, recognize_sign


def _emit(args, payload: dict, text: str):
    if getattr(args, "json", False):
        print(json.dumps(payload))
    else:
        print(text)


def _witness_text(w) -> str:
    return f"witness {' '.join(map(str, w.indices))} rank {w.observed_rank}"


def _field_arg(text: str):
    try:
        return parse_field(text)
    except ParseError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _indices_arg(text: str):
    try:
        return tuple(int(x) for x in text.replace(",", " ").split())
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad index list {text!r}") from None


def cmd_rank(args) -> int:
    m = read_matrix(args.file)
    r = rank(m)
    _emit(args, {"verdict": "ok", "rank": r}, str(r))
    return 0


def cmd_schur(args) -> int:
    m = read_matrix(args.file)
    s = schur_complement(m, args.indices)
    g = guttman_check(m, args.indices)
    text = format_matrix(s) + (
        f"# rank {g.rank_matrix} = {g.rank_block} + {g.rank_schur}: {g.holds}"
    )
    _emit(args, {"verdict": "ok", "schur": [[str(x) for x in row] for row in s.tolist()],
                 "rank": g.rank_matrix, "rank_block": g.rank_block,
                 "rank_schur": g.rank_schur, "guttman_holds": g.holds}, text)
    return 0


def cmd_even_check(args) -> int:
    m = read_matrix(args.file)
    v = check_all_principal_even(m, sample=args.sample, seed=args.seed, max_n=args.max_n)
    mode = v.mode if v.trials is None else f"sampled {v.trials} seed {v.seed}"
    if v.all_even:
        _emit(args, {"verdict": "all_even", "mode": v.mode}, f"all even ({mode})")
        return 0
    _emit(args, {"verdict": "odd", "mode": v.mode, "witness": v.witness.to_dict()},
          f"odd ({mode})\n{_witness_text(v.witness)}")
    return 1


def cmd_recognize(args) -> int:
    m = read_matrix(args.file)
    res = recognize_sign(m)
    if res.accepted:
        c = res.certificate
        if args.cert_out:
            Path(args.cert_out).write_text(format_certificate(c.row_signs, c.col_signs))
        _emit(args, {"verdict": "accept", "certificate": c.to_dict()},
              "accept\nrow_signs " + " ".join(map(str, c.row_signs))
              + "\ncol_signs " + " ".join(map(str, c.col_signs)))
        return 0
    _emit(args, {"verdict": "reject", "witness": res.witness.to_dict()},
          "reject\n" + _witness_text(res.witness))
    return 1


def cmd_scale_recognize(args) -> int:
    m = read_matrix(args.file)
    res = recognize_general_scaling(m)
    if res.accepted:
        c = res.certificate
        if args.cert_out:
            Path(args.cert_out).write_text(format_certificate(c.row_scalars, c.col_scalars))
        _emit(args, {"verdict": "accept", "certificate": c.to_dict()},
              "accept\nrow_scalars " + " ".join(map(str, c.row_scalars))
              + "\ncol_scalars " + " ".join(map(str, c.col_scalars)))
        return 0
    payload = {"verdict": "reject", "reason": res.reason}
    if res.cycle:
        payload["cycle"] = list(res.cycle)
    _emit(args, payload, "reject\n" + res.reason)
    return 1


def cmd_verify(args) -> int:
    m = read_matrix(args.file)
    rows, cols = parse_certificate(Path(args.cert).read_text(), m.field, m.nrows)
    if any(x == 0 for x in rows + cols):
        raise ParseError("certificate entries must be nonzero")
    ok = is_skew_symmetric(scale(m, rows, cols))
    _emit(args, {"verdict": "valid" if ok else "invalid"}, "valid" if ok else "invalid")
    return 0 if ok else 1


def cmd_lemma(args) -> int:
    f = args.field
    p = LemmaParams(args.n, f.parse(args.a), f.parse(args.b), f.parse(args.c), f)
    m = build_lemma_matrix(p)
    predicted = lemma_parity_predicate(p)
    r = rank(m)
    actual = r % 2 == 0
    text = (format_matrix(m) + f"# predicted {'even' if predicted else 'odd'}; "
            f"rank {r} ({'even' if actual else 'odd'})")
    _emit(args, {"verdict": "agree" if predicted == actual else "disagree",
                 "matrix": [[str(x) for x in row] for row in m.tolist()],
                 "rank": r, "predicted_even": predicted}, text)
    return 0 if predicted == actual else 1


def cmd_counterexample(args) -> int:
    if args.which == "remark1":
        f = args.field
        report = remark1_validate(f, f.parse(args.a), f.parse(args.b))
        text = "\n".join(f"{k} {v}" for k, v in report.to_dict().items())
        _emit(args, {"verdict": "counterexample" if report.is_counterexample else "not_counterexample",
                     **report.to_dict()}, text)
        return 0 if report.is_counterexample else 1
    m = remark2_matrix(args.field)
    skew = is_skew_symmetric(m)
    paper_cert_ok = is_skew_symmetric(apply_certificate(m, REMARK2_CERTIFICATE))
    res = recognize_sign(m)
    text = format_matrix(m) + (
        f"# skew-symmetric: {skew}\n# column 1 and row 3 by -1 gives skew: {paper_cert_ok}\n"
        f"# recognizer: {'accept' if res.accepted else 'reject'}"
    )
    payload = {"verdict": "accept" if res.accepted else "reject",
               "skew_symmetric": skew, "remark_certificate_valid": paper_cert_ok}
    if res.accepted:
        payload["certificate"] = res.certificate.to_dict()
    _emit(args, payload, text)
    return 0 if (paper_cert_ok and res.accepted and not skew) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="skewrank",
        description="Even-rank principal submatrices and sign-skew-symmetrizability.",
    )
    parser.add_argument("--version", action="version",
                        version=f"%(prog)s 0.1.0 ({kernels.BACKEND} kernels)")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help, file=True):
        p = sub.add_parser(name, help=help)
        if file:
            p.add_argument("file", help="matrix file")
        p.add_argument("--json", action="store_true", help="emit one JSON object")
        p.set_defaults(func=func)
        return p

    add("rank", cmd_rank, "print the rank")
    p = add("schur", cmd_schur, "Schur complement on a principal block")
    p.add_argument("--indices", type=_indices_arg, required=True, help="e.g. 1,2")
    p = add("even-check", cmd_even_check, "do all principal submatrices have even rank?")
    p.add_argument("--sample", type=int, metavar="N", help="check N random subsets instead")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-n", type=int, default=DEFAULT_MAX_N, help="exhaustive size guard")
    p = add("recognize", cmd_recognize, "sign-scaling recognizer with certificate/witness")
    p.add_argument("--cert-out", metavar="PATH", help="also write the certificate file")
    p = add("scale-recognize", cmd_scale_recognize, "nonzero-scalar scaling recognizer")
    p.add_argument("--cert-out", metavar="PATH", help="also write the certificate file")
    p = add("verify", cmd_verify, "check a stored certificate")
    p.add_argument("--cert", required=True, metavar="CERTFILE")
    p = add("lemma", cmd_lemma, "build a lemma-family matrix and check its parity", file=False)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--a", default="1")
    p.add_argument("--b", default="1")
    p.add_argument("--c", default="1")
    p.add_argument("--field", type=_field_arg, default=Q)
    p = add("counterexample", cmd_counterexample, "the two remark examples", file=False)
    p.add_argument("which", choices=("remark1", "remark2"))
    p.add_argument("--field", type=_field_arg, default=None)
    p.add_argument("--a", default="-1")
    p.add_argument("--b", default="2")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "counterexample" and args.field is None:
        args.field = parse_field("gf 5") if args.which == "remark1" else Q
    try:
        return args.func(args)
    except (SkewRankError, OSError, ValueError) as exc:
        print(f"skewrank {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
