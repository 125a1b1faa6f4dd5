import io
import sys

import pytest

from halidon_crypt import example_data as ex
from halidon_crypt.cli import main
from halidon_crypt.codec import SymbolTable
from halidon_crypt.crypto import RsaKeyPair
from halidon_crypt.errors import InvalidKey
from halidon_crypt.formats import FormatError, dumps_cipher, dumps_key, loads_cipher, loads_key, read_key, write_key


@pytest.fixture
def ref_keys(tmp_path):
    keys = RsaKeyPair.from_primes(ex.P1, ex.P2, ex.M)
    write_key(str(tmp_path / "ref.pub"), keys)
    write_key(str(tmp_path / "ref.key"), keys, private=True)
    return tmp_path / "ref"


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_keygen_seeded_reference(tmp_path, capsys):
    code, out, _ = run(capsys, "keygen", "--index", 50, "--bits", 10, "--seed", 21, "--out", tmp_path / "alice")
    assert code == 0
    assert out.split() == ["n", "=", "105851", "e", "=", "65537", "m", "=", "50"]
    pub = (tmp_path / "alice.pub").read_text()
    assert "p1" not in pub and "d =" not in pub
    key = read_key(str(tmp_path / "alice.key"))
    assert (key.private.p1, key.private.p2, key.private.d) == (151, 701, 48473)
    assert read_key(str(tmp_path / "alice.pub")).private is None


def test_keygen_reveal_and_explicit_primes(tmp_path, capsys):
    code, out, _ = run(capsys, "keygen", "--index", 50, "--p1", 151, "--p2", 701, "--out", tmp_path / "a", "--reveal")
    assert code == 0
    assert "d = 48473" in out and "phi = 105000" in out


def test_keygen_is_reproducible(tmp_path, capsys):
    run(capsys, "keygen", "--index", 6, "--bits", 40, "--seed", 5, "--out", tmp_path / "a")
    run(capsys, "keygen", "--index", 6, "--bits", 40, "--seed", 5, "--out", tmp_path / "b")
    assert (tmp_path / "a.key").read_text() == (tmp_path / "b.key").read_text()


@pytest.mark.parametrize(
    "argv",
    [
        ["keygen", "--index", "0", "--out", "x"],
        ["keygen", "--index", "50", "--p1", "151", "--out", "x"],
        ["roots", "--n", "105851"],
        ["nonsense"],
        [],
    ],
)
def test_usage_errors(argv, capsys):
    assert main(argv) == 2


def test_keygen_search_failure(tmp_path, capsys):
    code, _, err = run(capsys, "keygen", "--index", 50, "--bits", 6, "--out", tmp_path / "a")
    assert code == 3 and "error" in err


def test_keygen_invalid_primes(tmp_path, capsys):
    code, _, _ = run(capsys, "keygen", "--index", 50, "--p1", 151, "--p2", 151, "--out", tmp_path / "a")
    assert code == 4


def test_roots(capsys):
    code, out, _ = run(capsys, "roots", "--n", 105851, "--index", 50)
    lines = out.split()
    assert code == 0 and len(lines) == 400 and "37199" in lines
    assert [int(x) for x in lines] == sorted(int(x) for x in lines)
    code, fast, _ = run(capsys, "roots", "--n", 105851, "--index", 50, "--p1", 151, "--p2", 701)
    assert fast == out
    _, first, _ = run(capsys, "roots", "--n", 105851, "--index", 50, "--limit", 1)
    assert first.split() == [lines[0]]


def test_roots_non_invertible_index(capsys):
    assert run(capsys, "roots", "--n", 15, "--index", 3)[0] == 4


def test_wrap_unwrap(ref_keys, capsys):
    code, out, _ = run(capsys, "wrap", "--pub", f"{ref_keys}.pub", "--omega", 37199)
    assert (code, out.strip()) == (0, "104726")
    assert run(capsys, "wrap", "--pub", f"{ref_keys}.pub", "--omega", 1)[1].strip() == "1"
    assert run(capsys, "wrap", "--pub", f"{ref_keys}.pub", "--omega", ex.N)[0] == 2
    code, out, _ = run(capsys, "unwrap", "--key", f"{ref_keys}.key", "--c", 104726, "--validate")
    assert (code, out.strip()) == (0, "37199")


def test_unwrap_validate_rejects(ref_keys, capsys):
    assert run(capsys, "unwrap", "--key", f"{ref_keys}.key", "--c", 2)[0] == 0
    assert run(capsys, "unwrap", "--key", f"{ref_keys}.key", "--c", 2, "--validate")[0] == 4
    assert run(capsys, "unwrap", "--key", f"{ref_keys}.pub", "--c", 2)[0] == 2


def test_wrap_unwrap_roundtrip(ref_keys, capsys):
    for omega in (101, 381, 532):
        c = run(capsys, "wrap", "--pub", f"{ref_keys}.pub", "--omega", omega)[1].strip()
        assert run(capsys, "unwrap", "--key", f"{ref_keys}.key", "--c", c)[1].strip() == str(omega)


def test_encrypt_decrypt_files(tmp_path, capsys):
    msg, ct, back = tmp_path / "m.txt", tmp_path / "m.ct", tmp_path / "back.txt"
    msg.write_text(ex.MESSAGE + "\n")
    flags = ["--n", ex.N, "--index", ex.M, "--omega", ex.OMEGA]
    assert run(capsys, "encrypt", *flags, "--in", msg, "--out", ct)[0] == 0
    n, m, blocks = loads_cipher(ct.read_text())
    assert (n, m, len(blocks)) == (ex.N, ex.M, 1)
    assert blocks[0].values == ex.CIPHERTEXT
    assert run(capsys, "decrypt", *flags, "--in", ct, "--out", back)[0] == 0
    assert back.read_text() == ex.MESSAGE + " " * 11 + "\n"


def test_encrypt_non_unit_reports_frequency(tmp_path, capsys):
    msg = tmp_path / "blank.txt"
    msg.write_text("    \n")
    code, _, err = run(capsys, "encrypt", "--n", ex.N, "--index", ex.M, "--omega", ex.OMEGA, "--in", msg, "--out", tmp_path / "x")
    assert code == 3
    assert "frequency 1" in err and "block 1" in err


def test_encrypt_unknown_symbol(tmp_path, capsys):
    msg = tmp_path / "bad.txt"
    msg.write_text("HELLO!\n")
    code, _, err = run(capsys, "encrypt", "--n", ex.N, "--index", ex.M, "--omega", ex.OMEGA, "--in", msg, "--out", "-")
    assert code == 4 and "position 6" in err


def test_bad_omega(tmp_path, capsys):
    args = ["encrypt", "--n", ex.N, "--index", ex.M, "--in", "-", "--out", "-"]
    assert run(capsys, *args, "--omega", 2)[0] == 4
    assert run(capsys, *args, "--omega", ex.N + 5)[0] == 2


def test_stdin_stdout(capsys, monkeypatch):
    flags = ["--n", ex.N, "--index", ex.M, "--omega", ex.OMEGA]
    monkeypatch.setattr(sys, "stdin", io.StringIO(ex.MESSAGE))
    code, out, _ = run(capsys, "encrypt", *flags, "--in", "-", "--out", "-")
    assert code == 0 and out.splitlines()[3].split() == [str(v) for v in ex.CIPHERTEXT]
    monkeypatch.setattr(sys, "stdin", io.StringIO(out))
    code, out, _ = run(capsys, "decrypt", *flags, "--in", "-", "--out", "-")
    assert out.rstrip() == ex.MESSAGE


def test_custom_table_via_keyfile(tmp_path, capsys):
    keys = RsaKeyPair.from_primes(ex.P1, ex.P2, ex.M)
    table = SymbolTable.from_codes(list(range(42, 0, -1)))
    write_key(str(tmp_path / "t.pub"), keys, table)
    assert read_key(str(tmp_path / "t.pub")).table == table
    msg, ct, back = tmp_path / "m.txt", tmp_path / "m.ct", tmp_path / "b.txt"
    msg.write_text(ex.MESSAGE)
    flags = ["--keyfile", tmp_path / "t.pub", "--omega", ex.OMEGA]
    assert run(capsys, "encrypt", *flags, "--in", msg, "--out", ct)[0] == 0
    assert loads_cipher(ct.read_text())[2][0].values != ex.CIPHERTEXT
    assert run(capsys, "decrypt", *flags, "--in", ct, "--out", back)[0] == 0
    assert back.read_text().rstrip() == ex.MESSAGE
    # copying the table into a fresh key pair
    assert run(capsys, "keygen", "--index", 50, "--p1", 151, "--p2", 701, "--table-from", tmp_path / "t.pub", "--out", tmp_path / "c")[0] == 0
    assert read_key(str(tmp_path / "c.key")).table == table


def test_key_file_roundtrip_and_validation():
    keys = RsaKeyPair.from_primes(ex.P1, ex.P2, ex.M)
    for private in (False, True):
        text = dumps_key(keys, private=private)
        assert dumps_key(loads_key(text).private or loads_key(text).public, private=private) == text
    text = dumps_key(keys, private=True)
    with pytest.raises(FormatError, match="unknown"):
        loads_key(text + "colour = 3\n")
    with pytest.raises(FormatError, match="missing"):
        loads_key("n = 105851\ne = 65537\n")
    with pytest.raises(FormatError, match="duplicate"):
        loads_key(text + "n = 5\n")
    with pytest.raises(FormatError):
        loads_key(text.replace("phi = 105000", "phi = 105001"))
    with pytest.raises(FormatError):
        loads_key(text.replace("n = 105851", "n = -105851"))
    with pytest.raises(InvalidKey):
        loads_key(text.replace("d = 48473", "d = 48475"))
    with pytest.raises(FormatError):
        loads_key("n = 100\ne = 3\nm = 10\n")  # index not invertible


def test_cipher_file_validation():
    good = dumps_cipher([], ex.N, 2)
    assert loads_cipher(good) == (ex.N, 2, [])
    with pytest.raises(FormatError):
        loads_cipher("n = 7\nm = 1\nblocks = 1\n1 2 3\n")
    with pytest.raises(FormatError):
        loads_cipher("n = 7\nm = 1\nblocks = 1\n1 7\n")
    with pytest.raises(FormatError):
        loads_cipher("n = 7\nm = 1\nblocks = 2\n1 2\n")
    with pytest.raises(FormatError):
        loads_cipher("n = 7\nm = 1\n")


def test_decrypt_mismatched_cipher_file(tmp_path, capsys):
    ct = tmp_path / "x.ct"
    ct.write_text("n = 221\nm = 4\nblocks = 0\n")
    code = run(capsys, "decrypt", "--n", ex.N, "--index", ex.M, "--omega", ex.OMEGA, "--in", ct, "--out", "-")[0]
    assert code == 2


def test_selftest(capsys):
    code, out, _ = run(capsys, "selftest")
    assert code == 0
    assert "FAIL" not in out
    assert "NAME: XYACDX AGE: 67" in out


def test_selftest_detects_tampering(capsys, monkeypatch):
    tampered = list(ex.CIPHERTEXT)
    tampered[17] = (tampered[17] + 1) % ex.N
    monkeypatch.setattr(ex, "CIPHERTEXT", tuple(tampered))
    code, out, _ = run(capsys, "selftest")
    assert code != 0 and "FAIL" in out
