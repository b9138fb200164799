import io

import numpy as np
import pytest

from monoq import (
    CampaignConfig,
    ConfigError,
    build_config,
    figure_csv,
    figure_rows,
    reference_schmidt_state,
    replay_record,
    run_campaign,
    w_state,
)
from monoq.harness import (
    REFERENCE_ALPHA,
    derive_seed,
    falpha_table,
    fmt12,
    parse_config_file,
)
from monoq.measures import f_alpha


class TestReferenceStates:
    def test_schmidt_state_normalized(self):
        psi = reference_schmidt_state()
        assert abs(np.linalg.norm(psi.amplitudes) - 1.0) < 1e-12
        assert psi.n_qubits == 3

    def test_w_state_sizes(self):
        for n in (3, 4, 5):
            psi = w_state(n)
            assert psi.n_qubits == n
            assert abs(np.linalg.norm(psi.amplitudes) - 1.0) < 1e-12


class TestFigureData:
    def test_fig1_grid_and_ordering(self):
        header, rows = figure_rows("fig1")
        assert header == ("mu", "lhs", "ours", "prior")
        assert len(rows) == 161
        assert rows[0][0] == 2.0 and rows[-1][0] == 10.0
        for mu, lhs, ours, prior in rows:
            assert lhs >= ours >= prior > 0.0

    def test_fig1_closed_form_gap(self):
        # ours - prior must equal (2^mu - 2) E_pair^mu built from the same state
        header, rows = figure_rows("fig1")
        e_pair = rows[0][3] / 2.0  # prior at mu=2 is 2 E^2
        e_pair = np.sqrt(e_pair)
        for mu, lhs, ours, prior in rows:
            assert abs((ours - prior) - (2.0**mu - 2.0) * e_pair**mu) < 1e-9

    def test_fig1_first_row_squares(self):
        _, rows = figure_rows("fig1")
        mu, lhs, ours, prior = rows[0]
        assert lhs == pytest.approx(0.654205**2, abs=1e-5)
        assert ours == pytest.approx(4 * 0.318620**2, abs=1e-5)
        assert prior == pytest.approx(2 * 0.318620**2, abs=1e-5)

    def test_fig2_grid_and_ordering(self):
        header, rows = figure_rows("fig2")
        assert len(rows) == 101
        assert rows[0][0] == 0.0 and rows[-1][0] == 1.0
        for mu, lhs, ours, prior in rows[1:]:
            assert lhs <= ours + 1e-12
            assert ours <= prior + 1e-12

    def test_fig2_endpoint_rows(self):
        _, rows = figure_rows("fig2")
        assert rows[0] == (0.0, 1.0, 1.0, 2.0)
        mu, lhs, ours, prior = rows[-1]
        assert lhs == pytest.approx(0.932108, abs=1e-6)
        assert ours == pytest.approx(2 * 0.607218, abs=1e-5)
        assert abs(ours - prior) < 1e-12

    def test_unknown_figure(self):
        with pytest.raises(ConfigError):
            figure_rows("fig3")

    def test_csv_determinism(self):
        assert figure_csv("fig1") == figure_csv("fig1")
        first = figure_csv("fig2").splitlines()
        assert first[0] == "mu,lhs,ours,prior"
        assert first[1] == "0,1,1,2"


class TestConfig:
    def test_defaults(self):
        config = build_config({"mode": "ckw"})
        assert config.n_states == 1000
        assert config.state_class == "haar"
        assert config.mu_grid == (2.0,)

    def test_mode_specific_defaults(self):
        assert build_config({"mode": "polygamy"}).state_class == "wclass"
        assert build_config({"mode": "lemma1"}).mu_grid == (2.0, 3.0, 4.0)

    def test_grid_parsing(self):
        config = build_config({"mode": "monogamy", "alpha": "0.8229,1.3027", "mu": "2,3,5"})
        assert config.alpha_grid == (0.8229, 1.3027)
        assert config.mu_grid == (2.0, 3.0, 5.0)

    def test_invalid_settings(self):
        with pytest.raises(ConfigError):
            build_config({"mode": "nope"})
        with pytest.raises(ConfigError):
            build_config({"mode": "ckw", "states": 0})
        with pytest.raises(ConfigError):
            build_config({"mode": "ckw", "tolerance": 0.0})
        with pytest.raises(ConfigError):
            build_config({})
        with pytest.raises(ConfigError):
            CampaignConfig(mode="monogamy", state_class="file")

    def test_config_file_parsing(self, tmp_path):
        path = tmp_path / "campaign.cfg"
        path.write_text("# demo\nmode=ckw\nstates=50\nqubits=3\nseed=5\ntolerance=1e-10\n")
        settings = parse_config_file(path)
        assert settings == {"mode": "ckw", "states": 50, "qubits": 3, "seed": 5, "tolerance": 1e-10}

    def test_config_file_errors(self, tmp_path):
        bad = tmp_path / "bad.cfg"
        bad.write_text("modeckw\n")
        with pytest.raises(ConfigError):
            parse_config_file(bad)
        bad.write_text("unknown=1\n")
        with pytest.raises(ConfigError):
            parse_config_file(bad)
        bad.write_text("states=many\n")
        with pytest.raises(ConfigError):
            parse_config_file(bad)

    def test_haar_monogamy_beyond_three_qubits_rejected(self):
        config = CampaignConfig(mode="monogamy", n_states=2, n_qubits=4, state_class="haar")
        with pytest.raises(ConfigError):
            run_campaign(config)


class TestCampaigns:
    def test_ckw_clean(self):
        config = CampaignConfig(mode="ckw", n_states=200, n_qubits=3, seed=11, tolerance=1e-10)
        result = run_campaign(config)
        assert result.n_violations == 0
        assert result.min_margin >= -1e-10
        assert len(result.records) == 200

    def test_lemma1_clean(self):
        config = CampaignConfig(
            mode="lemma1", n_states=100, n_qubits=3, seed=12, mu_grid=(2.0, 3.0, 4.0),
            tolerance=1e-10,
        )
        result = run_campaign(config)
        assert result.n_violations == 0
        assert len(result.records) == 300

    def test_scalar_grid_clean(self):
        config = CampaignConfig(
            mode="scalar", n_states=1, mu_grid=(0.0, 0.5, 1.0, 2.0, 4.0), tolerance=1e-12
        )
        result = run_campaign(config)
        assert result.n_violations == 0
        assert len(result.records) == 5 * 200

    def test_polygamy_wclass_clean(self):
        config = CampaignConfig(
            mode="polygamy",
            n_states=80,
            n_qubits=4,
            seed=13,
            state_class="wclass",
            alpha_grid=(0.8229, 1.3027),
            mu_grid=(0.25, 0.5, 1.0),
        )
        result = run_campaign(config)
        assert result.n_sampled == 80
        assert result.n_satisfied + result.n_skipped == 80
        assert result.n_violations == 0

    def test_monogamy_haar_finds_violations(self):
        # the weighted lower bound genuinely fails on a fraction of ordered
        # 3-qubit states; the campaign must surface them, not hide them
        config = CampaignConfig(
            mode="monogamy",
            n_states=300,
            n_qubits=3,
            seed=14,
            alpha_grid=(0.8229,),
            mu_grid=(2.0,),
        )
        result = run_campaign(config)
        assert result.n_violations > 0
        assert result.worst.margin == result.min_margin
        assert result.min_margin < -1e-3

    def test_determinism(self):
        config = CampaignConfig(mode="ckw", n_states=50, n_qubits=3, seed=21)
        a, b = run_campaign(config), run_campaign(config)
        assert a.records == b.records
        out_a, out_b = io.StringIO(), io.StringIO()
        a.write_records_csv(out_a)
        b.write_records_csv(out_b)
        assert out_a.getvalue() == out_b.getvalue()

    def test_summary_fields(self):
        config = CampaignConfig(mode="ckw", n_states=10, n_qubits=3, seed=2)
        summary = run_campaign(config).summary()
        for key in ("mode", "n_sampled", "n_violations", "min_margin", "mean_tightness_gain"):
            assert key in summary

    def test_file_class_single_state(self, tmp_path):
        from monoq import save_state

        path = tmp_path / "w.json"
        save_state(w_state(), path)
        config = CampaignConfig(
            mode="polygamy",
            n_states=5,
            n_qubits=3,
            state_class="file",
            state_file=str(path),
            mu_grid=(0.5,),
            alpha_grid=(0.823,),
        )
        result = run_campaign(config)
        assert result.n_sampled == 1
        assert result.n_violations == 0


class TestReplay:
    @pytest.mark.parametrize(
        "config",
        [
            CampaignConfig(mode="ckw", n_states=20, n_qubits=3, seed=31),
            CampaignConfig(mode="lemma1", n_states=10, n_qubits=3, seed=32, mu_grid=(2.0, 3.0)),
            CampaignConfig(
                mode="monogamy", n_states=20, n_qubits=3, seed=33,
                alpha_grid=(0.8229,), mu_grid=(2.0,),
            ),
            CampaignConfig(
                mode="polygamy", n_states=20, n_qubits=4, seed=34, state_class="wclass",
                alpha_grid=(1.3027,), mu_grid=(0.5,),
            ),
            CampaignConfig(mode="scalar", n_states=1, mu_grid=(0.5, 2.0)),
        ],
        ids=["ckw", "lemma1", "monogamy", "polygamy", "scalar"],
    )
    def test_records_replay_exactly(self, config):
        result = run_campaign(config)
        assert result.records
        for record in result.records[:40]:
            assert abs(replay_record(record) - record.margin) < 1e-12


class TestHelpers:
    def test_fmt12(self):
        assert fmt12(0.5) == "0.5"
        assert fmt12(None) == ""
        assert fmt12(1 / 3) == "0.333333333333"
        assert fmt12(-0.0) == "-0"  # never produced by measure outputs

    def test_derive_seed_deterministic(self):
        assert derive_seed(42, 7) == derive_seed(42, 7)
        assert derive_seed(42, 7) != derive_seed(42, 8)
        assert derive_seed(43, 7) != derive_seed(42, 7)

    def test_falpha_table(self):
        header, rows = falpha_table([0.823, 1.3], points=5)
        assert header[0] == "x"
        assert len(rows) == 5
        assert rows[0][1] == 0.0
        assert abs(rows[-1][1] - 1.0) < 1e-12
        assert rows[2][1] == pytest.approx(f_alpha(0.5, 0.823), abs=1e-15)

    def test_falpha_table_validation(self):
        with pytest.raises(ConfigError):
            falpha_table([], points=5)
        with pytest.raises(ConfigError):
            falpha_table([0.9], points=1)

    def test_reference_alpha_reproduces_printed_values(self):
        # the six-decimal reference values are quoted at order 0.823
        assert abs(f_alpha(1 / 6, REFERENCE_ALPHA) - 0.318620) < 1e-6
        assert abs(f_alpha(0.5, REFERENCE_ALPHA) - 0.654205) < 1e-6
