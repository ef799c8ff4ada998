"""
Line-oriented text format for cell complexes.

    # comment
    cell <id> <dim>
    face <tau-id> <sigma-id> <+1|-1>
"""

from typing import Dict, List, Tuple

from loguru import logger

from cellricci.complex.models import Cell, CellComplex, IncidencePair
from cellricci.exceptions import ComplexFormatError

_SIGNS = {"+1": 1, "-1": -1}


def parse_complex_file(text: str) -> CellComplex:
    """
    Parse the ``cell``/``face`` text format.

    Every rejected line is reported with its 1-based number; structural
    checks (dd = 0, diamond, quasiconvexity) are left to ``validate``.
    """
    cells: Dict[str, Tuple[Cell, int]] = {}
    faces: Dict[Tuple[str, str], int] = {}
    incidences: List[IncidencePair] = []

    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        directive, args = tokens[0], tokens[1:]

        if directive == "cell":
            if len(args) != 2:
                raise ComplexFormatError("expected 'cell <id> <dim>'", line_number)
            cell_id, dim_text = args
            if cell_id in cells:
                raise ComplexFormatError(
                    f"duplicate cell id {cell_id} (first on line {cells[cell_id][1]})",
                    line_number,
                )
            try:
                dim = int(dim_text)
            except ValueError:
                raise ComplexFormatError(f"bad dimension {dim_text!r}", line_number) from None
            if dim < 0:
                raise ComplexFormatError(f"negative dimension {dim}", line_number)
            cells[cell_id] = (Cell(cell_id, dim), line_number)

        elif directive == "face":
            if len(args) != 3:
                raise ComplexFormatError(
                    "expected 'face <tau> <sigma> <+1|-1>'", line_number
                )
            tau, sigma, sign_text = args
            for endpoint in (tau, sigma):
                if endpoint not in cells:
                    raise ComplexFormatError(
                        f"face references undeclared cell {endpoint}", line_number
                    )
            if sign_text not in _SIGNS:
                raise ComplexFormatError(
                    f"bad incidence sign {sign_text!r}, expected +1 or -1", line_number
                )
            dim_tau, dim_sigma = cells[tau][0].dim, cells[sigma][0].dim
            if dim_tau != dim_sigma + 1:
                raise ComplexFormatError(
                    f"dimension mismatch: {tau} has dim {dim_tau}, {sigma} has dim {dim_sigma}",
                    line_number,
                )
            if (tau, sigma) in faces:
                raise ComplexFormatError(
                    f"duplicate face {tau} {sigma} (first on line {faces[(tau, sigma)]})",
                    line_number,
                )
            faces[(tau, sigma)] = line_number
            incidences.append(IncidencePair(tau, sigma, _SIGNS[sign_text]))

        else:
            raise ComplexFormatError(f"unknown directive {directive!r}", line_number)

    complex_ = CellComplex([cell for cell, _ in cells.values()], incidences)
    logger.debug(f"Parsed complex with f-vector {complex_.f_vector()}")
    return complex_


def serialize_complex(c: CellComplex) -> str:
    """Write ``c`` in canonical order (cells by dim then id, faces by tau)."""
    lines = [f"# cellricci complex f-vector {' '.join(map(str, c.f_vector()))}"]
    lines += [f"cell {cell.id} {cell.dim}" for cell in c]
    lines += [
        f"face {pair.tau} {pair.sigma} {'+1' if pair.sign > 0 else '-1'}"
        for pair in c.incidence_pairs()
    ]
    return "\n".join(lines) + "\n"


__all__ = ["parse_complex_file", "serialize_complex"]
