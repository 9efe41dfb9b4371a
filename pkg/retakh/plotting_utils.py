"""
This module contains utility methods to plot the convergence scans.
"""
import os

import numpy as np
import pandas as pd
import seaborn as sns
import matplotlib.pyplot as plt

from matplotlib.ticker import ScalarFormatter

from retakh import constants

# Black and white friendly palette
palette1 = sns.color_palette(['#3B82CE', '#FFCC01', '#F2811D', '#DA4228', '#3BB3A9'])


def prep_data_convergence(scans):
    """ Stack the per comparison scans in a single long DataFrame.

    :param scans: (dict) comparison identifier -> scan DataFrame
    :return: (DataFrame) columns kind, n, abs_error
    """

    frames = []
    for kind, scan_df in scans.items():
        temp_df = scan_df[['n', 'abs_error']].copy()
        temp_df['kind'] = [constants.human_mapping[kind]] * temp_df.shape[0]
        frames.append(temp_df)

    return pd.concat(frames, ignore_index=True, sort=False)


def convergence_plot(data_df, plt_save_dir, file_name, show=False):
    """ Plot |ratio - 1| against n on log-log axes, one line per comparison.

    :param data_df: (DataFrame) formatted DataFrame from prep_data_convergence
    :param plt_save_dir: (str) path to plot saving directory
    :param file_name: (str) name of the image file, without extension
    :param show: (bool) flag, if set show the plot when it is generated
    :return: (str) path of the saved figure, None if not saved
    """

    fig = plt.figure(figsize=(12, 8))
    sns.set(style='whitegrid', font_scale=1.4)

    # Rungs with an exact match would vanish on a log scale
    data_df = data_df[data_df['abs_error'] > 0]

    lplt = sns.lineplot(
        x='n',
        y='abs_error',
        hue='kind',
        data=data_df,
        palette=palette1[:data_df['kind'].nunique()],
        marker='o',
        linewidth=2.5
    )

    axes = lplt.axes
    axes.set_xscale('log')
    axes.set_yscale('log')
    axes.set_xticks(np.unique(data_df['n'].to_numpy()))
    axes.get_xaxis().set_major_formatter(ScalarFormatter())
    plt.xlabel('n')
    plt.ylabel('|exact / asymptotic - 1|')
    axes.legend(loc='upper center', bbox_to_anchor=(0.5, -0.12), ncol=1)

    if show:
        plt.show()

    save_path = None
    if plt_save_dir:
        save_path = os.path.join(plt_save_dir, file_name + '.png')
        fig.savefig(save_path, bbox_inches='tight')

    plt.close(fig)
    return save_path
