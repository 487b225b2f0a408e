"""
Report Service
==============

Sweep tables as pandas DataFrames and CSV files.

File Format:
    eta,lower_rc,rate_opt,eta_d_star,gamma_star,upper_phi
    one row per transmissivity, 9 significant digits, '\\n' line endings,
    no index column. Formatting goes through '%g'-style codes, which use
    a '.' decimal point regardless of locale.
"""

import logging
import os

import pandas as pd

from app.utils.exceptions import UsageError


SWEEP_HEADER = ('eta', 'lower_rc', 'rate_opt', 'eta_d_star', 'gamma_star', 'upper_phi')

# SweepRow attribute feeding each column
_ROW_FIELDS = ('eta', 'lower_rc', 'r_opt', 'eta_d_star', 'gamma_star', 'upper_phi')


class ReportService:
    """Service class for sweep tables."""

    @staticmethod
    def sweep_frame(rows):
        """DataFrame with the SWEEP_HEADER columns, one row per SweepRow."""
        records = [[getattr(row, field) for field in _ROW_FIELDS] for row in rows]
        return pd.DataFrame(records, columns=list(SWEEP_HEADER), dtype=float)

    @staticmethod
    def format_value(value, digits=9):
        """One value as written to the CSV."""
        return f'{value:.{digits}g}'

    @staticmethod
    def write_sweep_csv(rows, path, digits=9):
        """
        Write sweep rows to a CSV file.

        Missing parent directories are created.

        Args:
            rows (list of SweepRow): Rows in output order
            path (str): Destination file
            digits (int): Significant digits per value

        Returns:
            pd.DataFrame: The table that was written

        Raises:
            OSError: If the file cannot be written
        """
        frame = ReportService.sweep_frame(rows)

        parent = os.path.dirname(os.path.abspath(path))
        os.makedirs(parent, exist_ok=True)

        frame.to_csv(
            path,
            index=False,
            float_format=f'%.{digits}g',
            lineterminator='\n'
        )
        logging.info(f"Wrote {len(frame)} sweep rows to {path}")
        return frame

    @staticmethod
    def read_sweep_csv(path):
        """
        Read a sweep CSV back into a DataFrame.

        Raises:
            UsageError: If the header does not match SWEEP_HEADER
        """
        frame = pd.read_csv(path, dtype=float)
        if tuple(frame.columns) != SWEEP_HEADER:
            raise UsageError(
                f'Unexpected sweep header {list(frame.columns)}; '
                f'expected {list(SWEEP_HEADER)}.'
            )
        return frame
