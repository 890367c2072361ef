import json
from fractions import Fraction

import pytest

from hookcontent.cli import main, show
from hookcontent.identities import (
    ConfigError,
    IdentityCheck,
    IdentityError,
    format_rational,
    parse_config,
    render,
    run_identity,
    run_suite,
)
from hookcontent.partitions import StrictPartition

P = StrictPartition


def test_normalization_small():
    rep = run_identity(IdentityCheck("normalization", 3, 3))
    assert rep.rows[0].lhs == 6 == rep.rows[0].rhs


def test_content_binomial_examples():
    rep = run_identity(IdentityCheck("content-binomial", 2, 2, k=1))
    assert rep.rows[0].lhs == 1 and rep.passed
    for k in range(4):
        rep = run_identity(IdentityCheck("content-binomial", 0, k, k=k))
        assert all(r.lhs == 0 == r.rhs for r in rep.rows)


def test_k1_skew_empty_mu_is_binomial():
    rep = run_identity(IdentityCheck("k1-skew", 0, 8))
    assert [r.lhs for r in rep.rows] == [n * (n - 1) // 2 for n in range(9)]


def test_unknown_identity_and_bad_range():
    with pytest.raises(IdentityError):
        IdentityCheck("nonsense")
    with pytest.raises(IdentityError):
        IdentityCheck("normalization", 3, 1)


def test_poly_detect_report():
    rep = run_identity(IdentityCheck("poly-detect", 0, 15, exponents=(1,)))
    assert rep.passed and rep.detail["degree"] == 2
    small = run_identity(IdentityCheck("poly-detect", 0, 15, exponents=(1,), fit_max=3))
    assert not small.passed and small.error.startswith("inconclusive")


def test_format_rational():
    assert format_rational(Fraction(3)) == "3"
    assert format_rational(Fraction(-1, 2)) == "-1/2"


def test_json_schema():
    rep = run_identity(IdentityCheck("skew-hook", 0, 2, mu=P((2, 1))))
    (line,) = render([rep], "json").splitlines()
    obj = json.loads(line)
    assert obj["identity"] == "skew-hook"
    assert obj["params"] == {"n": "0..2", "mu": "2,1"}
    assert obj["rows"] == [{"n": n, "lhs": "1/6", "rhs": "1/6", "pass": True} for n in range(3)]
    assert obj["pass"] is True


def test_csv_and_text():
    rep = run_identity(IdentityCheck("normalization", 0, 2))
    assert render([rep], "csv").splitlines() == [
        "identity,params,n,lhs,rhs,pass",
        "normalization,,0,1,1,pass",
        "normalization,,1,1,1,pass",
        "normalization,,2,2,2,pass",
    ]
    assert render([rep], "text").startswith("[PASS] normalization n=0..2")


def test_parse_config():
    cfg = parse_config(
        """
        # comment
        identities = skew-hook, content-binomial
        n = 0..3
        seed = 42
        skew-hook.mu = -; 2,1
        content-binomial.k = 1,2
        content-binomial.n = 0..5
        """
    )
    assert cfg.seed == 42
    assert [(c.name, str(c.mu), c.k, c.n_max) for c in cfg.checks] == [
        ("skew-hook", "-", 0, 3),
        ("skew-hook", "2,1", 0, 3),
        ("content-binomial", "-", 1, 5),
        ("content-binomial", "-", 2, 5),
    ]


@pytest.mark.parametrize(
    "text, where",
    [
        ("identities = bogus", "line 1"),
        ("\nfoo = 1", "line 2"),
        ("no equals sign", "line 1"),
        ("skew-hook.zzz = 1", "line 1"),
        ("\n\nbogus.n = 0..2", "line 3"),
    ],
)
def test_config_errors_carry_line(text, where):
    with pytest.raises(ConfigError, match=where):
        parse_config(text)


def test_config_value_error():
    with pytest.raises(ConfigError):
        parse_config("skew-hook.mu = 2,2")


def test_suite_with_n_max_zero_passes():
    reports, code = run_suite(parse_config("n_max = 0"))
    assert code == 0
    assert all(len(r.rows) == 1 and r.rows[0].n == 0 for r in reports)


def test_suite_reports_are_reproducible():
    cfg = "identities = k2-skew, poly-detect\nn = 0..6"
    a = render(run_suite(parse_config(cfg))[0], "json")
    b = render(run_suite(parse_config(cfg))[0], "json")
    assert a == b


def test_show_tables():
    lam = P((7, 5, 4, 1))
    rows = [list(map(int, line.split())) for line in show(lam, "hooks").splitlines()]
    assert rows == [[12, 11, 8, 7, 5, 4, 1], [9, 6, 5, 3, 2], [5, 4, 2, 1], [1]]
    rows = [list(map(int, line.split())) for line in show(lam, "contents").splitlines()]
    assert rows == [list(range(1, p + 1)) for p in lam.parts]
    assert "x: 1 2 6 8" in show(lam, "corners")
    assert "q_1 = 17" in show(lam, "q")


def test_cli_exit_codes(tmp_path, capsys):
    assert main(["verify", "--identity", "k1-skew", "--mu", "3,1", "--n", "0..5", "--format", "json"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert json.loads(lines[0])["pass"] is True

    assert main(["verify", "--identity", "nonsense"]) == 2
    assert main(["verify", "--identity", "normalization", "--k", "2"]) == 2
    assert main(["verify", "--identity", "skew-hook", "--mu", "2,2"]) == 2

    bad = tmp_path / "bad.cfg"
    bad.write_text("identities = normalization, nope\n")
    assert main(["suite", "--config", str(bad)]) == 2
    assert "line 1" in capsys.readouterr().err

    good = tmp_path / "good.cfg"
    good.write_text("n_max = 0\n")
    assert main(["suite", "--config", str(good), "--format", "csv"]) == 0
    assert capsys.readouterr().out.startswith("identity,params,n,lhs,rhs,pass")

    assert main(["show", "--lambda", "7,5,4,1", "--what", "hooks"]) == 0
    assert capsys.readouterr().out.splitlines()[0].split() == ["12", "11", "8", "7", "5", "4", "1"]


def test_cli_failure_exit_code(monkeypatch, capsys):
    import hookcontent.identities as ident

    monkeypatch.setattr(ident, "k2_skew_rhs", lambda mu, n: Fraction(n))
    assert main(["verify", "--identity", "k2-skew", "--n", "0..4"]) == 1
    assert "MISMATCH" in capsys.readouterr().out
