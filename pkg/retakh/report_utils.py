"""
This module assembles the output records of the command line tool and
renders them as json, csv or plain text.

A record is {"command", "parameters", "payload"}. Counts are integers,
exact rationals are "p/q" strings, real values are decimal strings with
constants.FLOAT_DIGITS significant digits. Rendering is deterministic.
"""
import io
import sys
import json
import platform

from dataclasses import dataclass, field
from typing import List, Optional

import pandas as pd

from retakh import __version__
from retakh import constants
from retakh import common_utils
from retakh.errors import DomainError


@dataclass
class OutputRecord:
    command: str
    parameters: dict
    payload: dict
    table: Optional[List[dict]] = None
    meta: dict = field(default_factory=dict)

    def to_dict(self):
        out = {
            'command': self.command,
            'parameters': self.parameters,
            'payload': self.payload
        }
        if self.meta:
            out['meta'] = self.meta
        return out


def environment_meta():
    """ Environment information, only ever added outside the payload. """
    return {
        'retakh': __version__,
        'python': platform.python_version(),
        'platform': platform.platform()
    }


# ######## #
# PAYLOADS #
# ######## #

def histogram_payload(hist):
    """ JSON object keys must be strings; keep the numeric order. """
    return {str(k): v for k, v in sorted(hist.items())}


def series_payload(series, name):
    return {
        'name': name,
        'order': series.order,
        'coefficients': [common_utils.format_exact(c) for c in series.coeffs]
    }


def height_payload(report, histogram=None):
    payload = {
        'semilength': report.n,
        'total_even_height': report.exact_total_even_height,
        'normalizer': report.normalizer,
        'exact_average': common_utils.format_exact(report.exact_average),
        'exact_average_real': common_utils.format_float(report.exact_average),
        'asymptotic_average': common_utils.format_float(report.asymptotic_average),
        'ratio': common_utils.format_float(report.ratio),
        'method': report.method,
        'oracle_checked': report.oracle_checked
    }
    if histogram is not None:
        payload['histogram'] = histogram_payload(histogram)
    return payload


def leaves_payload(report):
    payload = {
        'semilength': report.semilength,
        'node_count': report.node_count,
        'total_leaves': report.exact_total_leaves,
        'normalizer': report.normalizer,
        'exact_average': common_utils.format_exact(report.exact_average),
        'exact_average_real': common_utils.format_float(report.exact_average),
        'asymptotic_average': common_utils.format_float(report.asymptotic_average),
        'ratio': common_utils.format_float(report.ratio),
        'method': report.method,
        'oracle_checked': report.oracle_checked
    }
    if report.distribution is not None:
        payload['distribution'] = histogram_payload(report.distribution)
    return payload


# ######### #
# RENDERING #
# ######### #

def _flat_row(payload):
    row = {}
    for key, value in payload.items():
        if isinstance(value, (dict, list)):
            value = json.dumps(value, sort_keys=True)
        row[key] = value
    return row


def to_dataframe(record):
    """ Tabular view of a record: its table if it has one, else a single row. """

    if record.table is not None:
        return pd.DataFrame([_flat_row(r) for r in record.table])
    return pd.DataFrame([_flat_row(record.payload)])


def render(record, fmt='json'):
    """ Render a record.

    :param record: (OutputRecord) record to render
    :param fmt: (str) one of constants.possible_formats
    :return: (str) rendered text, newline terminated
    """

    if fmt not in constants.possible_formats:
        raise DomainError('Unknown output format {!r}'.format(fmt))

    if fmt == 'json':
        return json.dumps(record.to_dict(), sort_keys=True, indent=2) + '\n'

    if fmt == 'csv':
        buffer = io.StringIO()
        to_dataframe(record).to_csv(buffer, index=False, lineterminator='\n')
        return buffer.getvalue()

    lines = ['{} ({})'.format(record.command, ', '.join(
        '{}={}'.format(k, v) for k, v in sorted(record.parameters.items())
    ))]
    for key, value in record.payload.items():
        if isinstance(value, (dict, list)):
            value = json.dumps(value, sort_keys=True)
        lines.append('  {}: {}'.format(key, value))
    for key, value in sorted(record.meta.items()):
        lines.append('  [{}] {}'.format(key, value))
    return '\n'.join(lines) + '\n'


def emit(record, fmt='json', stream=None):
    (stream or sys.stdout).write(render(record, fmt))
