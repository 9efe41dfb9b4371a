"""
This script runs a batch of asymptotic comparisons with the provided
configuration options.

Scan scripts require a configuration file with the following fields:

{
  "comparisons": "list of strings -- asymptotic comparisons to scan [motzkin, avg_height, avg_leaves, height_numerator]",
  "ladder": "list of integers -- increasing semilengths at which to compare",
  "save_dir": "string -- directory where the summaries are written",
  "plot": "bool -- optional, also save a log-log plot of |ratio - 1|"
}

To run the default ladder (n = 125 ... 2000) on every comparison:
`python asymptotic_scan.py -c configs/scan_default.json`

A short ladder, useful as a smoke test:
`python asymptotic_scan.py -c configs/scan_quick.json`
"""

import os
import time
import argparse

from retakh import constants
from retakh import common_utils
from retakh import plotting_utils
from retakh import convergence_utils


def run_scans(cfg):
    """ Run the configured convergence scans and save their summaries.

    :param cfg: (dict) scan parameters
    :return: (dict) comparison identifier -> scan DataFrame
    """

    print('Config: {}\n'.format(cfg))

    ladder = cfg['ladder']
    exp_name = common_utils.get_exp_name(cfg['comparisons'], ladder)
    print('{}\nCurrent experiment: {}\n{}\n'.format('-' * 80, exp_name, '-' * 80))

    # Create experiment directories
    exp_dir = os.path.join(cfg['save_dir'], exp_name)
    exp_img_dir = os.path.join(exp_dir, 'images')
    if not os.path.exists(exp_img_dir):
        os.makedirs(exp_img_dir)

    scans = {}
    for kind in cfg['comparisons']:
        start_time = time.time()
        scan_df = convergence_utils.convergence_scan(kind, ladder)
        violations = convergence_utils.ladder_violations(scan_df['abs_error'].tolist())

        print(constants.human_mapping[kind])
        print(scan_df)
        print('Ladder violations: {}'.format(violations))
        print('Scan took {:.2f} seconds\n'.format(time.time() - start_time))

        scan_df.to_csv(
            os.path.join(exp_dir, exp_name + '__' + kind + '__summary_df.csv'),
            index=False,
            lineterminator='\n'
        )
        scans[kind] = scan_df

    if cfg['plot']:
        data_df = plotting_utils.prep_data_convergence(scans)
        save_path = plotting_utils.convergence_plot(data_df, exp_img_dir, exp_name + '__convergence')
        print('Plot saved to {}'.format(save_path))

    return scans


if __name__ == "__main__":
    parser = argparse.ArgumentParser()
    parser.add_argument(
        '-c', '--config',
        help='Scan configuration file path',
        type=str,
        required=True
    )
    parser.add_argument(
        '-v', '--verbose',
        help='Show progress bars and timings',
        action='store_true'
    )
    arguments = parser.parse_args()

    # Unwrap arguments
    args = vars(arguments)
    constants.VERBOSE = args['verbose']
    config = common_utils.read_config(args['config'])

    run_scans(config)
