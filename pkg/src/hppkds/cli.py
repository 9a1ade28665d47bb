"""Command-line front end.

Exit codes: 0 success / signature OK, 1 failure / signature FAIL, 2 usage or
malformed input.
"""

from __future__ import annotations

import argparse
import random
import secrets
import sys
from pathlib import Path

from . import codec
from .cryptanalysis import (barrett_tail_experiment, forgery_search, recover_hidden_rings,
                            recover_signing_ratio)
from .errors import CodecError, HppkError, MalformedSignature, RetryExhausted
from .keygen import generate_keypair
from .params import LEVELS, hash_to_segments, standard_params, toy_params
from .signer import sign, sign_segment
from .verifier import verify

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
ATTACK_MAX_L = 24


class UsageError(Exception):
    pass


def _rng(seed):
    return random.Random(seed) if seed is not None else secrets.SystemRandom()


def _params(level: str):
    return toy_params() if level == "toy" else standard_params(level)


def _read(path) -> bytes:
    try:
        return Path(path).read_bytes()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def cmd_keygen(args, out) -> int:
    prm = _params(args.level)
    sk, pk = generate_keypair(prm, _rng(args.seed), beta=1 if args.beta_one else None)
    pk_b, sk_b = codec.encode_public(pk), codec.encode_private(sk)
    prefix = Path(args.out)
    Path(f"{prefix}.pk").write_bytes(pk_b)
    Path(f"{prefix}.sk").write_bytes(sk_b)
    print(f"level {args.level}: wrote {prefix}.pk ({len(pk_b)} bytes), "
          f"{prefix}.sk ({len(sk_b)} bytes)", file=out)
    return EXIT_OK


def cmd_sign(args, out) -> int:
    sk_path = Path(args.sk)
    pk_path = Path(args.pk) if args.pk else sk_path.with_suffix(".pk")
    try:
        sk = codec.decode_private(_read(sk_path))
        pk = codec.decode_public(_read(pk_path))
    except (CodecError, UsageError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FAIL
    message = _read(args.msg)
    try:
        sig = sign(sk, pk, message, _rng(args.seed))
    except (RetryExhausted, HppkError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FAIL
    blob = codec.encode_signature(sig)
    Path(args.out).write_bytes(blob)
    print(f"wrote {args.out} ({len(blob)} bytes, {len(sig.pairs)} segments)", file=out)
    return EXIT_OK


def cmd_verify(args, out) -> int:
    try:
        pk = codec.decode_public(_read(args.pk))
        sig = codec.decode_signature(_read(args.sig))
        message = _read(args.msg)
        ok = verify(pk, message, sig, _rng(args.seed), rounds=args.rounds)
    except (CodecError, MalformedSignature, UsageError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print("OK" if ok else "FAIL", file=out)
    return EXIT_OK if ok else EXIT_FAIL


def _int_list(text: str) -> list[int]:
    try:
        vals = [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated integer list: {text!r}")
    if not vals or min(vals) < 0:
        raise argparse.ArgumentTypeError("need one or more non-negative integers")
    return vals


def _positive(text: str) -> int:
    try:
        v = int(float(text)) if "e" in text.lower() else int(text, 0)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if v < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return v


def cmd_experiment(args, out) -> int:
    if args.bits < 8:
        raise UsageError("--bits must be >= 8")
    print("bits,delta,trials,tail_count,fraction", file=out)
    for delta in args.delta:
        tail = barrett_tail_experiment(args.bits, delta, args.trials,
                                       seed=args.seed, workers=args.workers)
        print(f"{args.bits},{delta},{args.trials},{tail},{tail / args.trials:.6g}", file=out)
    return EXIT_OK


def _load_signatures(sigs_dir: Path):
    """``(x, F, H)`` triples from every ``<stem>.sig`` with a matching ``<stem>.msg``."""
    triples = []
    for sig_path in sorted(sigs_dir.glob("*.sig")):
        msg_path = sig_path.with_suffix(".msg")
        if not msg_path.exists():
            continue
        sig = codec.decode_signature(sig_path.read_bytes())
        xs = hash_to_segments(msg_path.read_bytes(), sig.params)
        triples += [(x, F, H) for x, (F, H) in zip(xs, sig.pairs)]
    return triples


def _distinct_x(triples):
    seen, out = set(), []
    for t in triples:
        if t[0] not in seen:
            seen.add(t[0])
            out.append(t)
    return out


def cmd_attack(args, out) -> int:
    try:
        pk = codec.decode_public(_read(args.pk))
    except CodecError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    L = pk.params.L
    if L > ATTACK_MAX_L and not args.force:
        print(f"error: RefusedScale: L={L} exceeds desk scale ({ATTACK_MAX_L} bits); "
              "pass --force to run anyway", file=sys.stderr)
        return EXIT_FAIL
    if args.mode == "ring-recovery":
        lo, hi = 1 << (L - 1), 1 << L
        rec = recover_hidden_rings(pk, lo, hi, force=args.force)
        success = len(rec.s1_candidates) == 1 and len(rec.s2_candidates) == 1
        print("mode: ring-recovery", file=out)
        print(f"success: {success}", file=out)
        print(f"work: {rec.work}", file=out)
        print(f"S1 candidates: {' '.join(map(str, rec.s1_candidates)) or '-'}", file=out)
        print(f"S2 candidates: {' '.join(map(str, rec.s2_candidates)) or '-'}", file=out)
        print(f"elapsed: {rec.elapsed:.3f}s", file=out)
        if success and args.sigs:
            triples = _distinct_x(_load_signatures(Path(args.sigs)))
            try:
                key = recover_signing_ratio(pk, rec.s1_candidates[0], rec.s2_candidates[0],
                                            triples, _rng(args.seed))
            except HppkError as exc:
                print(f"signing key: not recovered ({type(exc).__name__}: {exc})", file=out)
            else:
                print(f"f (up to scalar): {list(key.f.coeffs)}", file=out)
                print(f"h (up to scalar): {list(key.h.coeffs)}", file=out)
                print(f"R1: {key.private_key.R1}  R2: {key.private_key.R2}", file=out)
                print(f"forged signature verifies: {key.validated}", file=out)
        return EXIT_OK if success else EXIT_FAIL
    genuine = ()
    if args.sk:
        sk = codec.decode_private(_read(args.sk))
        genuine = [sign_segment(sk, args.x, a) for a in range(1, pk.params.p)]
    report = forgery_search(pk, args.x % pk.params.p, args.budget, _rng(args.seed),
                            genuine=genuine, force=args.force)
    for line in report.lines():
        print(line, file=out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hppkds", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("keygen", help="generate a key pair")
    p.add_argument("--level", required=True, choices=[*LEVELS, "toy"])
    p.add_argument("--out", required=True, help="output prefix; writes PREFIX.pk and PREFIX.sk")
    p.add_argument("--seed", type=int)
    p.add_argument("--beta-one", action="store_true", help="fix the public scaling to 1")
    p.set_defaults(func=cmd_keygen)

    p = sub.add_parser("sign", help="sign a file")
    p.add_argument("--sk", required=True)
    p.add_argument("--pk", help="public key used for the self-check (default: SK with .pk)")
    p.add_argument("--msg", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--seed", type=int)
    p.set_defaults(func=cmd_sign)

    p = sub.add_parser("verify", help="verify a signature")
    p.add_argument("--pk", required=True)
    p.add_argument("--msg", required=True)
    p.add_argument("--sig", required=True)
    p.add_argument("--seed", type=int)
    p.add_argument("--rounds", type=_positive, default=2)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("experiment", help="Barrett tail frequency versus margin (CSV)")
    p.add_argument("--bits", type=int, required=True)
    p.add_argument("--delta", type=_int_list, default=[0, 8, 16, 24, 32])
    p.add_argument("--trials", type=_positive, default=10**6)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=_positive, default=1)
    p.set_defaults(func=cmd_experiment)

    p = sub.add_parser("attack", help="toy-scale key recovery or forgery search")
    p.add_argument("--pk", required=True)
    p.add_argument("--mode", required=True, choices=["ring-recovery", "forgery"])
    p.add_argument("--sigs", help="directory of NAME.sig / NAME.msg pairs")
    p.add_argument("--budget", type=_positive, default=1 << 20)
    p.add_argument("--x", type=int, default=0, help="target field element for forgery")
    p.add_argument("--sk", help="private key, to label accepted pairs on the alpha-orbit")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--force", action="store_true")
    p.set_defaults(func=cmd_attack)
    return parser


def main(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except HppkError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
