"""Command-line interface.

    halidon-crypt keygen  --index M --bits B [--seed S] --out PREFIX
    halidon-crypt roots   --n N --index M [--p1 P --p2 Q] [--limit K]
    halidon-crypt wrap    --pub FILE --omega W
    halidon-crypt unwrap  --key FILE --c C [--validate]
    halidon-crypt encrypt --n N --index M --omega W --in MSG --out CT
    halidon-crypt decrypt --n N --index M --omega W --in CT --out MSG
    halidon-crypt selftest

Exit codes: 0 success, 2 usage, 3 algebraic failure (non-unit), 4 validation failure.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
import tempfile
import time

from . import example_data
from .codec import DEFAULT_TABLE, decode, encode
from .crypto import RsaKeyPair, decrypt_message, encrypt_message, keygen, unwrap_root, wrap_root
from .errors import HalidonError, NotAUnit, NotAUnitElement, SearchExhausted
from .formats import read_cipher, read_key, read_message, write_cipher, write_key, write_message
from .halidon import HalidonContext, find_primitive_roots

EXIT_OK, EXIT_USAGE, EXIT_ALGEBRA, EXIT_VALIDATION = 0, 2, 3, 4

log = logging.getLogger("halidon_crypt")


class UsageError(Exception):
    pass


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _index(text: str) -> int:
    value = int(text)
    if value < 2:
        raise argparse.ArgumentTypeError(f"index must be >= 2, got {text}")
    return value


def _nonneg(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text}")
    return value


def cmd_keygen(args) -> int:
    if args.p1 is not None or args.p2 is not None:
        if args.p1 is None or args.p2 is None:
            raise UsageError("--p1 and --p2 must be given together")
        keys = RsaKeyPair.from_primes(args.p1, args.p2, args.index, args.e)
    else:
        keys = keygen(args.index, args.bits, args.seed)
    table = read_key(args.table_from).table if args.table_from else None
    write_key(args.out + ".pub", keys, table)
    write_key(args.out + ".key", keys, table, private=True)
    print(f"n = {keys.n}\ne = {keys.e}\nm = {keys.m}")
    if args.reveal:
        print(f"p1 = {keys.p1}\np2 = {keys.p2}\nphi = {keys.phi}\nd = {keys.d}")
    return EXIT_OK


def cmd_roots(args) -> int:
    factors = None
    if args.p1 is not None or args.p2 is not None:
        if args.p1 is None or args.p2 is None:
            raise UsageError("--p1 and --p2 must be given together")
        factors = (args.p1, args.p2)
    for omega in find_primitive_roots(args.n, args.index, args.limit, factors):
        print(omega)
    return EXIT_OK


def cmd_wrap(args) -> int:
    pub = read_key(args.pub).public
    if args.omega >= pub.n:
        raise UsageError(f"omega must be below n = {pub.n}")
    print(wrap_root(args.omega, pub, validate=args.validate).c)
    return EXIT_OK


def cmd_unwrap(args) -> int:
    key = read_key(args.key)
    if key.private is None:
        raise UsageError(f"{args.key} is a public key file; unwrap needs the private key")
    if args.c >= key.public.n:
        raise UsageError(f"c must be below n = {key.public.n}")
    print(unwrap_root(args.c, key.private, validate=args.validate))
    return EXIT_OK


def _context_and_table(args):
    table = DEFAULT_TABLE
    n, m = args.n, args.index
    if args.keyfile:
        key = read_key(args.keyfile)
        table = key.table
        n = n or key.public.n
        m = m or key.public.m
    if n is None or m is None:
        raise UsageError("give --n and --index, or --keyfile")
    if args.omega >= n:
        raise UsageError(f"omega must be below n = {n}")
    return HalidonContext(n, m, args.omega), table


def cmd_encrypt(args) -> int:
    ctx, table = _context_and_table(args)
    blocks = encrypt_message(read_message(args.input), ctx, table)
    write_cipher(args.output, blocks, ctx.n, ctx.m)
    return EXIT_OK


def cmd_decrypt(args) -> int:
    ctx, table = _context_and_table(args)
    n, m, blocks = read_cipher(args.input)
    if (n, m) != (ctx.n, ctx.m):
        raise UsageError(f"cipher file is for n={n}, m={m}; context has n={ctx.n}, m={ctx.m}")
    write_message(args.output, decrypt_message(blocks, ctx, table))
    return EXIT_OK


def cmd_selftest(args) -> int:
    """Replay the reference example through the file formats."""
    ex = example_data
    started = time.perf_counter()
    failures = []

    def check(label: str, ok: bool):
        print(f"[{'PASS' if ok else 'FAIL'}] {label}")
        if not ok:
            failures.append(label)

    keys = RsaKeyPair.from_primes(ex.P1, ex.P2, ex.M)
    check("stage 1 keys: n, phi, e, d", (keys.n, keys.phi, keys.e, keys.d) == (ex.N, ex.PHI, ex.E, ex.D))

    with tempfile.TemporaryDirectory() as tmp:
        prefix = os.path.join(tmp, "alice")
        write_key(prefix + ".pub", keys)
        write_key(prefix + ".key", keys, private=True)
        pub = read_key(prefix + ".pub").public
        priv = read_key(prefix + ".key").private

        roots = find_primitive_roots(ex.N, ex.M, factors=(ex.P1, ex.P2))
        check(f"root census: {len(roots)} primitive {ex.M}-th roots", len(roots) == ex.ROOT_COUNT)
        check("secret root is primitive", ex.OMEGA in roots)

        c = wrap_root(ex.OMEGA, pub).c
        check(f"wrap: omega^e mod n = {c}", c == ex.WRAPPED)
        omega = unwrap_root(ex.WRAPPED, priv, validate=True)
        check(f"unwrap: c^d mod n = {omega}", omega == ex.OMEGA)

        ctx = HalidonContext(ex.N, ex.M, omega)
        check("message encodes to reference codes", encode(ex.MESSAGE, DEFAULT_TABLE, ex.M)[0] == list(ex.PLAINTEXT_CODES))

        msg_path, ct_path = os.path.join(tmp, "msg.txt"), os.path.join(tmp, "msg.ct")
        write_message(msg_path, ex.MESSAGE)
        write_cipher(ct_path, encrypt_message(read_message(msg_path), ctx), ctx.n, ctx.m)
        _, _, blocks = read_cipher(ct_path)
        check("encryption reproduces the reference ciphertext", [b.values for b in blocks] == [tuple(ex.CIPHERTEXT)])

        ref_path, out_path = os.path.join(tmp, "ref.ct"), os.path.join(tmp, "ref.txt")
        with open(ref_path, "w", encoding="utf-8") as fh:
            fh.write(f"n = {ex.N}\nm = {ex.M}\nblocks = 1\n" + " ".join(map(str, ex.CIPHERTEXT)) + "\n")
        _, _, blocks = read_cipher(ref_path)
        try:
            write_message(out_path, decrypt_message(blocks, ctx))
            recovered = read_message(out_path)
        except HalidonError as exc:
            recovered = f"<decryption failed: {exc}>"
        check("decryption recovers the message", recovered.rstrip(" ") == ex.MESSAGE)
        print(recovered.rstrip(" "))

    elapsed = time.perf_counter() - started
    check(f"runtime {elapsed:.2f} s < 5 s", elapsed < 5.0)
    return EXIT_OK if not failures else EXIT_VALIDATION


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="halidon-crypt", description="RSA-wrapped dihedral group-ring cipher")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("keygen", help="generate Alice's key pair")
    p.add_argument("--index", type=_index, required=True, help="index m (block length is 2m)")
    p.add_argument("--bits", type=_positive, default=512, help="maximum bit length of each prime")
    p.add_argument("--seed", type=int)
    p.add_argument("--p1", type=_positive, help="use this prime instead of searching")
    p.add_argument("--p2", type=_positive)
    p.add_argument("--e", type=_positive, help="public exponent (default 65537 or next coprime)")
    p.add_argument("--table-from", help="copy the symbol table from this key file")
    p.add_argument("--out", required=True, help="writes OUT.pub and OUT.key")
    p.add_argument("--reveal", action="store_true", help="also print the secret values")
    p.set_defaults(func=cmd_keygen)

    p = sub.add_parser("roots", help="list primitive m-th roots of unity mod n")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--index", type=_positive, required=True)
    p.add_argument("--p1", type=_positive)
    p.add_argument("--p2", type=_positive)
    p.add_argument("--limit", type=_positive)
    p.set_defaults(func=cmd_roots)

    p = sub.add_parser("wrap", help="Bob: c = omega^e mod n")
    p.add_argument("--pub", required=True)
    p.add_argument("--omega", type=_nonneg, required=True)
    p.add_argument("--validate", action="store_true", help="require omega to be a primitive root")
    p.set_defaults(func=cmd_wrap)

    p = sub.add_parser("unwrap", help="Alice: omega = c^d mod n")
    p.add_argument("--key", required=True)
    p.add_argument("--c", type=_nonneg, required=True)
    p.add_argument("--validate", action="store_true", help="require the result to be a primitive root")
    p.set_defaults(func=cmd_unwrap)

    for name, func, in_help, out_help in (
        ("encrypt", cmd_encrypt, "message file", "cipher file"),
        ("decrypt", cmd_decrypt, "cipher file", "message file"),
    ):
        p = sub.add_parser(name, help=f"{name} with the group-ring inverse")
        p.add_argument("--n", type=_positive)
        p.add_argument("--index", type=_index)
        p.add_argument("--keyfile", help="take n, m and the symbol table from a key file")
        p.add_argument("--omega", type=_nonneg, required=True)
        p.add_argument("--in", dest="input", required=True, help=f"{in_help} ('-' for stdin)")
        p.add_argument("--out", dest="output", required=True, help=f"{out_help} ('-' for stdout)")
        p.set_defaults(func=func)

    p = sub.add_parser("selftest", help="reproduce the reference example end to end")
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (NotAUnitElement, NotAUnit, SearchExhausted) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ALGEBRA
    except (HalidonError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION


if __name__ == "__main__":
    sys.exit(main())
