import pandas as pd
import pytest
import yaml

from beamforming import views
from beamforming.errors import EXIT_CONFIG, EXIT_NUMERICAL, EXIT_OK, ConfigurationError
from beamforming.forms import parse_sweep
from sva_lab.commands import execute_from_command_line, resolve_config_path


def test_run_writes_patterns_and_metrics(scenario_config):
    config = scenario_config('single_source', methods=['rect', 'sva-joint'])
    result = views.run(config, gnuplot=True)
    out = config.output_dir

    assert sorted(p.name for p in out.iterdir()) == ['metrics.txt', 'plot.gp', 'rect.csv', 'sva-joint.csv']
    assert set(result.patterns) == {'rect', 'sva-joint'}

    rect = pd.read_csv(out / 'rect.csv')
    assert list(rect.columns) == ['angle_deg', 'power_db']
    assert len(rect) == 1801
    assert rect['power_db'].max() == 0.0

    sva = pd.read_csv(out / 'sva-joint.csv')
    assert list(sva.columns) == ['angle_deg', 'power_db', 'alpha']
    assert sva['alpha'].between(0.0, 0.5).all()

    lines = (out / 'metrics.txt').read_text(encoding='utf-8').splitlines()
    names = [line.partition('=')[0] for line in lines]
    assert 'rect.mainlobe_width_deg' in names
    assert 'sva-joint.peak_loss_db' in names
    assert "'sva-joint.csv'" in (out / 'plot.gp').read_text(encoding='utf-8')


def test_run_without_alpha_trace(scenario_config):
    config = scenario_config('single_source', methods=['sva-separate'])
    data = config.model_dump()
    data['emit_alpha_trace'] = False
    config = type(config).model_validate(data)

    views.run(config)
    assert list(pd.read_csv(config.output_dir / 'sva-separate.csv').columns) == ['angle_deg', 'power_db']


def test_run_rejects_uneven_padding(scenario_config):
    data = scenario_config('single_source').model_dump()
    data['dft_size'] = 1000
    config = type(scenario_config('single_source')).model_validate(data)
    with pytest.raises(ConfigurationError):
        views.run(config)


def test_sweep(scenario_config):
    config = scenario_config('single_source', methods=['rect', 'sva-joint'])
    spec = parse_sweep('sensor_count', ['32', '64'])
    result = views.sweep(config, spec)
    out = config.output_dir

    assert (out / 'sensor_count=32' / 'rect.csv').exists()
    assert (out / 'sensor_count=64' / 'sva-joint.csv').exists()

    summary = pd.read_csv(out / 'summary.csv')
    assert len(summary) == 4
    assert list(summary['sensor_count']) == [32, 32, 64, 64]
    assert {'method', 'mainlobe_width_deg', 'peak_sidelobe_db', 'noise_floor_db'} <= set(summary.columns)
    assert len(result.runs) == 2

    narrow = summary.query("sensor_count == 64 and method == 'rect'")['mainlobe_width_deg'].iloc[0]
    wide = summary.query("sensor_count == 32 and method == 'rect'")['mainlobe_width_deg'].iloc[0]
    assert wide > 1.8 * narrow


def test_dump_config(scenario_config, tmp_path):
    config = scenario_config('close_pair_32')
    target = tmp_path / 'effective.yaml'
    text = views.dump_config(config, target)
    assert target.read_text(encoding='utf-8') == text
    assert yaml.safe_load(text)['scenario']['geometry']['sensor_count'] == 32


def test_resolve_config_path():
    assert resolve_config_path('close_pair_noisy').name == 'close_pair_noisy.yaml'
    assert resolve_config_path('close_pair_noisy.yaml').name == 'close_pair_noisy.yaml'


def test_cli_run(tmp_path):
    code = execute_from_command_line([
        'run', '--config', 'single_source', '--methods', 'rect,hanning', '--out', str(tmp_path), '--seed', '5',
    ])
    assert code == EXIT_OK
    assert (tmp_path / 'hanning.csv').exists()
    assert not (tmp_path / 'sva-joint.csv').exists()


def test_cli_sweep(tmp_path):
    code = execute_from_command_line([
        'sweep', '--config', 'single_source', '--methods', 'rect', '--out', str(tmp_path),
        '--param', 'snr_db', '--values', '10,30',
    ])
    assert code == EXIT_OK
    assert (tmp_path / 'snr_db=10' / 'rect.csv').exists()
    assert len(pd.read_csv(tmp_path / 'summary.csv')) == 2


def test_cli_dump_config(capsys):
    assert execute_from_command_line(['dump-config', '--config', 'close_pair_weak_target', '--seed', '3']) == EXIT_OK
    data = yaml.safe_load(capsys.readouterr().out)
    assert data['scenario']['seed'] == 3


@pytest.mark.parametrize('argv, code', [
    (['run', '--config', 'no_such_scenario'], EXIT_CONFIG),
    (['run', '--config', 'single_source', '--methods', 'beamsteer'], EXIT_CONFIG),
    (['sweep', '--config', 'single_source', '--param', 'colour', '--values', '1'], EXIT_CONFIG),
    (['sweep', '--config', 'single_source', '--param', 'dft_size', '--values', '1000'], EXIT_NUMERICAL),
])
def test_cli_exit_codes(tmp_path, argv, code):
    assert execute_from_command_line(argv + ['--out', str(tmp_path)]) == code


def test_coarse_grid_reports_nan_peak_loss(scenario_config):
    # no 0.7 deg grid angle lies within 0.1 deg of 90
    data = scenario_config('single_source', methods=['rect', 'sva-joint']).model_dump()
    data.update(angle_step_deg=0.7, declared_angles=[90.0, 89.8])
    config = type(scenario_config('single_source')).model_validate(data)

    result = views.run(config)
    assert [row['method'] for row in result.rows] == ['rect', 'sva-joint']
    lines = (config.output_dir / 'metrics.txt').read_text(encoding='utf-8').splitlines()
    assert 'rect.peak_loss_db=nan' in lines
    assert 'sva-joint.peak_loss_db=nan' in lines
