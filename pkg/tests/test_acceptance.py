"""Exit criteria. One test per criterion; the terminal summary lists PASS/FAIL per line."""

import random
import subprocess
import sys
import time

import pytest

from conftest import random_element, random_unit, small_context
from halidon_crypt import example_data as ex
from halidon_crypt.codec import decode, encode
from halidon_crypt.crypto import RsaKeyPair, decrypt_block, encrypt_block, unwrap_root, wrap_root
from halidon_crypt.dihedral import (
    GroupRingElement,
    identity,
    inverse_weights,
    invert,
    is_unit_element,
    multiply,
    spectral_transform,
    to_matrix,
    wrap,
)
from halidon_crypt.errors import NotAUnitElement
from halidon_crypt.halidon import HalidonContext, find_primitive_roots
from halidon_crypt.modint import mod_inverse, mod_pow
from halidon_crypt.oracle import matrix_inverse_crt

pytestmark = pytest.mark.acceptance


def report(criterion, detail):
    print(f"criterion {criterion}: PASS ({detail})")


def test_criterion_1_stage1_values():
    start = time.perf_counter()
    c = mod_pow(37199, 65537, 105851)
    omega = mod_pow(104726, 48473, 105851)
    d = mod_inverse(65537, 105000)
    elapsed = time.perf_counter() - start
    assert (c, omega, d) == (104726, 37199, 48473)
    assert elapsed < 1e-3
    report(1, f"c={c}, omega={omega}, d={d} in {elapsed * 1e6:.0f} us")


def geometric_sums_vanish(omega, m, n):
    if pow(omega, m, n) != 1:
        return False
    for r in range(m):
        total = sum(pow(omega, r * k, n) for k in range(m)) % n
        if total != (m if r == 0 else 0):
            return False
    return True


def test_criterion_2_root_census():
    start = time.perf_counter()
    scan = find_primitive_roots(105851, 50)
    t_scan = time.perf_counter() - start
    start = time.perf_counter()
    fast = find_primitive_roots(105851, 50, factors=(151, 701))
    t_fast = time.perf_counter() - start
    assert len(scan) == 400 and 37199 in scan
    assert scan == fast
    assert all(geometric_sums_vanish(w, 50, 105851) for w in scan)
    assert t_scan < 60 and t_fast < 1
    report(2, f"400 roots, scan {t_scan:.2f} s, CRT {t_fast:.3f} s")


def test_criterion_3_stage2_reference_block():
    start = time.perf_counter()
    ctx = HalidonContext(105851, 50, 37199)
    assert len(ex.MESSAGE) == 89
    (codes,) = encode(ex.MESSAGE, m=50)
    assert codes == list(ex.PLAINTEXT_CODES) and codes[-11:] == [36] * 11
    block = encrypt_block(codes, ctx)
    recovered = decrypt_block(block, ctx)
    elapsed = time.perf_counter() - start
    mismatches = [k + 1 for k, (x, y) in enumerate(zip(block.values, ex.CIPHERTEXT)) if x != y]
    u = GroupRingElement(50, 105851, tuple(codes))
    assert multiply(u, GroupRingElement(50, 105851, block.values)) == identity(50, 105851)
    assert mismatches == []
    assert recovered == codes and decode(recovered).rstrip() == ex.MESSAGE
    assert elapsed < 1
    report(3, f"100/100 positions equal, {elapsed * 1e3:.0f} ms")


ORACLE_RINGS = [(15, 2, (3, 5)), (221, 2, (13, 17)), (221, 4, (13, 17)), (91, 3, (7, 13)), (91, 6, (7, 13)), (105851, 2, (151, 701))]


def test_criterion_4_oracle_equivalence():
    rng = random.Random(404)
    contexts = [(small_context(n, m), f) for n, m, f in ORACLE_RINGS]
    for k in range(200):
        ctx, (p1, p2) = contexts[k % len(contexts)]
        u = random_unit(rng, ctx)
        assert to_matrix(invert(u, ctx)).rows == matrix_inverse_crt(to_matrix(u), p1, p2).rows
    report(4, "200 units over m in {2,3,4,6}")


def test_criterion_5_homomorphism():
    rng = random.Random(505)
    for _ in range(500):
        m, n = rng.randint(1, 8), rng.randint(2, 10**4)
        u, v = random_element(rng, m, n), random_element(rng, m, n)
        assert to_matrix(multiply(u, v)) == to_matrix(u) @ to_matrix(v)
    report(5, "500 random pairs")


def test_criterion_6_spectral_identities():
    rng = random.Random(606)
    contexts = [small_context(n, m) for n, m, _ in ORACLE_RINGS] + [
        small_context(105851, 5),
        small_context(105851, 10),
        HalidonContext(105851, 50, 37199),
    ]
    agreed = 0
    for k in range(500):
        ctx = contexts[k % len(contexts)]
        u = random_element(rng, ctx.m, ctx.n)
        s = spectral_transform(u, ctx)
        for i in range(1, ctx.m + 1):
            j = wrap(ctx.m - i + 2, ctx.m)
            assert s.lam[j - 1] == s.eta[i - 1]
            assert s.gamma[j - 1] == s.delta[i - 1]
        try:
            closed = inverse_weights(s, "closed")
        except NotAUnitElement:
            continue
        assert closed == inverse_weights(s, "direct")
        agreed += 1
    assert agreed > 0
    report(6, f"500 elements, {agreed} with unit dets cross-checked")


ROUNDTRIP_RINGS = [(105851, 50), (105851, 10), (105851, 5), (105851, 2), (221, 4), (91, 3), (91, 6)]


def test_criterion_7_roundtrip_and_involution():
    rng = random.Random(707)
    for n, m in ROUNDTRIP_RINGS:
        ctx = HalidonContext(105851, 50, 37199) if m == 50 else small_context(n, m)
        done = 0
        while done < 100:
            codes = [rng.randint(1, 42) for _ in range(2 * m)]
            try:
                block = encrypt_block(codes, ctx)
            except NotAUnitElement:
                continue
            assert decrypt_block(block, ctx) == codes
            u = GroupRingElement(m, n, tuple(codes))
            assert invert(invert(u, ctx), ctx) == u
            done += 1
    report(7, f"100 plaintexts for each of {len(ROUNDTRIP_RINGS)} (n, m) settings")


def test_criterion_8_rsa_identity():
    keys = RsaKeyPair.from_primes(151, 701, 50)
    rng = random.Random(808)
    for _ in range(1000):
        x = rng.randrange(105851)
        assert mod_pow(x, keys.e * keys.d, 105851) == x
        assert unwrap_root(wrap_root(x, keys.public), keys) == x
    report(8, "1000 residues")


def test_criterion_9_cli_selftest():
    start = time.perf_counter()
    proc = subprocess.run([sys.executable, "-m", "halidon_crypt", "selftest"], capture_output=True, text=True, timeout=60)
    elapsed = time.perf_counter() - start
    assert proc.returncode == 0, proc.stdout + proc.stderr
    assert "NAME: XYACDX" in proc.stdout
    assert elapsed < 5
    report(9, f"exit 0 in {elapsed:.2f} s")
