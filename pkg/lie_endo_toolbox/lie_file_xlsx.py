"""Module used to import algebras from xlsx files and export results to xlsx"""

import logging

import openpyxl
import xlsxwriter

from lie_endo_toolbox.lie_algebra import load_algebra
from lie_endo_toolbox.lie_errors import AlgebraFormatError

STRUCTURE_TITLES = ('I', 'J', 'K', 'C')
CONVERGENCE_TITLES = ('DT', 'DRIFT', 'RATIO')


def _check_extension(file_xlsx):
    if not file_xlsx or not str(file_xlsx).endswith(".xlsx"):
        raise AlgebraFormatError(f"Extension not valid for {file_xlsx!r}, expected .xlsx")


def _index(value, title, row):
    if isinstance(value, float) and value.is_integer():
        value = int(value)
    if not isinstance(value, int) or isinstance(value, bool):
        raise AlgebraFormatError(f"Row {row}: column {title} must hold an integer, got {value!r}")
    return value


class LieXlsx:
    """Class used to import/export structure constants and flow results"""

    def __init__(self):
        self.logger = logging.getLogger(self.__class__.__name__)

    def import_algebra_xlsx(self, file_xlsx, dim=None, validate=True):
        """Read an algebra from the active sheet, named after the algebra.

        The first row holds the titles I, J, K, C in any order; `dim`
        defaults to the largest index found."""
        _check_extension(file_xlsx)
        workbook = openpyxl.load_workbook(file_xlsx, read_only=True, data_only=True)
        worksheet = workbook.active

        rows = worksheet.iter_rows(values_only=True)
        titles = {}
        for idx, cell in enumerate(next(rows, ())):
            if cell is not None:
                titles[str(cell).strip().upper()] = idx
        missing = [title for title in STRUCTURE_TITLES if title not in titles]
        if missing:
            raise AlgebraFormatError("Error format file xlsx, missing columns: "
                                     + ", ".join(missing))

        structure = []
        for number, row in enumerate(rows, start=2):
            if all(cell is None for cell in row):
                continue
            self.logger.debug("Reading structure row {}".format(number))
            entry = {title.lower(): _index(row[titles[title]], title, number)
                     for title in ('I', 'J', 'K')}
            coefficient = row[titles['C']]
            if coefficient is None:
                raise AlgebraFormatError(f"Row {number}: column C is empty")
            entry['c'] = str(coefficient).strip()
            structure.append(entry)
        workbook.close()

        if dim is None:
            dim = max((max(entry['i'], entry['j'], entry['k']) for entry in structure),
                      default=1)
        doc = {'name': worksheet.title, 'dim': dim, 'structure': structure}
        self.logger.debug("Read {} structure rows from {}".format(len(structure), file_xlsx))
        return load_algebra(doc, validate=validate)

    def export_algebra_xlsx(self, algebra, file_xlsx):
        """Write the nonzero structure constants, one row per key i < j"""
        _check_extension(file_xlsx)
        workbook = xlsxwriter.Workbook(file_xlsx)
        worksheet = workbook.add_worksheet(algebra.name[:31])
        for column, title in enumerate(STRUCTURE_TITLES):
            worksheet.write(0, column, title)
        for row, ((i, j, k), value) in enumerate(sorted(algebra.structure.items()), start=1):
            worksheet.write(row, 0, i)
            worksheet.write(row, 1, j)
            worksheet.write(row, 2, k)
            worksheet.write_string(row, 3, str(value))
        workbook.close()
        self.logger.debug("Exported {} to {}".format(algebra.name, file_xlsx))
        return True

    def export_trajectory_xlsx(self, trajectory, file_xlsx):
        """Write the samples of a trajectory with the CSV columns"""
        _check_extension(file_xlsx)
        workbook = xlsxwriter.Workbook(file_xlsx)
        worksheet = workbook.add_worksheet("trajectory")
        worksheet.write_row(0, 0, trajectory.header())
        for row, values in enumerate(trajectory.rows(), start=1):
            worksheet.write_row(row, 0, [float(value) for value in values])
        workbook.close()
        self.logger.debug("Exported {} samples to {}".format(len(trajectory), file_xlsx))
        return True

    def export_convergence_xlsx(self, rows, file_xlsx):
        """Write a convergence table, an empty cell standing for a missing ratio"""
        _check_extension(file_xlsx)
        workbook = xlsxwriter.Workbook(file_xlsx)
        worksheet = workbook.add_worksheet("convergence")
        worksheet.write_row(0, 0, CONVERGENCE_TITLES)
        for index, row in enumerate(rows, start=1):
            worksheet.write(index, 0, row.dt)
            worksheet.write(index, 1, row.drift)
            if row.ratio is not None:
                worksheet.write(index, 2, row.ratio)
        workbook.close()
        return True
