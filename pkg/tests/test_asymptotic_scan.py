import os

import pandas as pd

import asymptotic_scan

from retakh import plotting_utils


def test_run_scans(tmp_path):
    cfg = {
        'comparisons': ['motzkin', 'avg_leaves'],
        'ladder': [20, 40, 80],
        'save_dir': str(tmp_path),
        'plot': True
    }
    scans = asymptotic_scan.run_scans(cfg)
    assert set(scans) == {'motzkin', 'avg_leaves'}

    exp_dir = tmp_path / 'motzkin__avg_leaves__20_80'
    summary = pd.read_csv(exp_dir / 'motzkin__avg_leaves__20_80__avg_leaves__summary_df.csv')
    assert summary['n'].tolist() == [20, 40, 80]
    assert (summary['abs_error'] < 0.2).all()
    assert os.path.isfile(exp_dir / 'images' / 'motzkin__avg_leaves__20_80__convergence.png')


def test_prep_data_convergence():
    scans = {
        'motzkin': pd.DataFrame({'n': [1, 2], 'abs_error': [0.2, 0.1], 'ratio': [1.2, 1.1]}),
        'avg_leaves': pd.DataFrame({'n': [1, 2], 'abs_error': [0.3, 0.0], 'ratio': [0.7, 1.0]})
    }
    data_df = plotting_utils.prep_data_convergence(scans)
    assert list(data_df.columns) == ['n', 'abs_error', 'kind']
    assert data_df.shape[0] == 4
    assert data_df['kind'].nunique() == 2
