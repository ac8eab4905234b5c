import pytest

from leapertour.geom import Leaper
from leapertour.keygraph import build_key
from leapertour.splice import splice, symmetric_splice
from leapertour.verify import (
    is_free,
    oracle_tour_search,
    verify_central_symmetry,
    verify_tour,
)


def knight_tour_6x6():
    key = build_key(Leaper(1, 2))
    return splice(key, [0] * len(key.rhombi))


def test_generator_output_is_valid():
    tour = knight_tour_6x6()
    report = verify_tour(tour.cells, 1, 2, 6, 6)
    assert report.valid
    assert report.first_failure is None


def test_swapping_two_cells_breaks_legality():
    cells = list(knight_tour_6x6().cells)
    cells[3], cells[10] = cells[10], cells[3]
    report = verify_tour(cells, 1, 2, 6, 6)
    assert not report.all_moves_legal
    assert not report.valid
    assert report.first_failure is not None


def test_repeated_cell_detected():
    cells = list(knight_tour_6x6().cells)
    cells[5] = cells[0]
    report = verify_tour(cells, 1, 2, 6, 6)
    assert not report.all_cells_once


def test_truncated_tour_fails_count():
    cells = list(knight_tour_6x6().cells)[:-4]
    report = verify_tour(cells, 1, 2, 6, 6)
    assert not report.cell_count_ok


def test_open_path_not_closed():
    # a legal path whose ends are not a knight move apart
    cells = [(0, 0), (1, 2), (2, 4)]
    report = verify_tour(cells, 1, 2, 6, 6)
    assert report.all_moves_legal
    assert not report.closed


def test_central_symmetry_of_symmetric_generator():
    key = build_key(Leaper(1, 2))
    tour = symmetric_splice(key)
    assert verify_central_symmetry(tour.cells, 6, 6)


def test_central_symmetry_handbuilt_four_cycle():
    # knight 4-cycle on a 5x3 board, symmetric about its center (2, 1)
    cells = [(0, 1), (2, 0), (4, 1), (2, 2)]
    assert verify_central_symmetry(cells, 5, 3)
    rotated = cells[1:] + cells[:1]
    assert verify_central_symmetry(rotated, 5, 3)
    assert verify_central_symmetry(list(reversed(cells)), 5, 3)


def test_generic_asymmetric_input():
    cells = [(0, 0), (1, 2), (2, 0)]
    assert not verify_central_symmetry(cells, 6, 6)


@pytest.mark.parametrize(
    "p,q,expected",
    [(1, 2, True), (1, 3, False), (3, 4, True), (2, 5, True), (2, 4, False)],
)
def test_is_free(p, q, expected):
    assert is_free(p, q) is expected


def test_is_free_rejects_nonpositive():
    with pytest.raises(ValueError):
        is_free(0, 2)


def test_oracle_finds_knight_tour_on_6x6():
    tour = oracle_tour_search(1, 2, 6, 6)
    assert tour is not None
    assert verify_tour(tour, 1, 2, 6, 6).valid


def test_oracle_rejects_5x5_by_parity():
    assert oracle_tour_search(1, 2, 5, 5) is None


def test_oracle_board_size_cap():
    with pytest.raises(ValueError):
        oracle_tour_search(1, 2, 10, 10)
