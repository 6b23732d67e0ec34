import numpy as np
import pytest

from helpers import (
    compare_pixelwise,
    oracle_morph,
    oracle_scalar_morph,
    random_quantized,
)
from morphlat.image import StructuringElement, VectorImage, cross_se, square_se
from morphlat.image_io import distinct_values
from morphlat.morphology import close_, dilate, erode, open_
from morphlat.orders import LexOrder, MarginalOrder, RankOrder

RED = (1.0, 0.0, 0.0)
BLUE = (0.0, 0.0, 1.0)
MAGENTA = (1.0, 0.0, 1.0)
BLACK = (0.0, 0.0, 0.0)

H3 = StructuringElement(((0, -1), (0, 0), (0, 1)))


def gray(values):
    return VectorImage(np.asarray(values, dtype=float)[np.newaxis, :, np.newaxis])


class TestFlatGrayscale:
    def test_dilate_takes_window_max(self):
        out = dilate(gray([0.2, 0.8, 0.5]), H3, LexOrder())
        assert np.allclose(out.data[0, :, 0], [0.8, 0.8, 0.8])

    def test_erode_takes_window_min(self):
        out = erode(gray([0.2, 0.8, 0.5]), H3, LexOrder())
        assert np.allclose(out.data[0, :, 0], [0.2, 0.2, 0.5])

    def test_open_removes_an_isolated_peak(self):
        img = gray([0.1, 0.1, 0.9, 0.1, 0.1])
        out = open_(img, H3, LexOrder())
        assert np.allclose(out.data[0, :, 0], 0.1)

    def test_close_fills_an_isolated_pit(self):
        img = gray([0.9, 0.9, 0.1, 0.9, 0.9])
        out = close_(img, H3, LexOrder())
        assert np.allclose(out.data[0, :, 0], 0.9)

    def test_windows_truncate_at_the_border(self):
        # leftmost output only sees pixels 0 and 1, there is no padding value
        out = erode(gray([0.5, 0.9]), H3, LexOrder())
        assert np.allclose(out.data[0, :, 0], [0.5, 0.5])

    @pytest.mark.parametrize("op", ["dilate", "erode"])
    def test_matches_scalar_oracle(self, rng, op):
        fn = dilate if op == "dilate" else erode
        for se in (square_se(3), cross_se(3), H3):
            for _ in range(5):
                img = random_quantized(rng, 7, 9, channels=1, palette=11)
                got = fn(img, se, LexOrder())
                assert got.equals(oracle_scalar_morph(img, se, op))


class TestColorOrders:
    def test_marginal_sup_mixes_channels(self):
        img = VectorImage(np.array([[RED, BLUE]], dtype=float))
        out = dilate(img, H3, MarginalOrder())
        assert out.pixel(0, 0) == MAGENTA
        assert out.pixel(0, 1) == MAGENTA

    def test_marginal_inf_mixes_channels(self):
        img = VectorImage(np.array([[RED, BLUE]], dtype=float))
        out = erode(img, H3, MarginalOrder())
        assert out.pixel(0, 0) == BLACK

    def test_lex_sup_keeps_values_intact(self):
        img = VectorImage(np.array([[RED, BLUE]], dtype=float))
        out = dilate(img, H3, LexOrder())
        assert out.pixel(0, 0) == RED
        assert out.pixel(0, 1) == RED
        out = erode(img, H3, LexOrder())
        assert out.pixel(0, 0) == BLUE

    def test_marginal_equals_per_channel_scalar_morphology(self, rng):
        img = random_quantized(rng, 6, 8, channels=3, palette=9)
        for fn, op in ((dilate, "dilate"), (erode, "erode")):
            got = fn(img, square_se(3), MarginalOrder())
            for c in range(3):
                chan = VectorImage(img.data[:, :, c])
                want = oracle_scalar_morph(chan, square_se(3), op)
                assert np.array_equal(got.data[:, :, c], want.data[:, :, 0])

    @pytest.mark.parametrize("op", ["dilate", "erode"])
    def test_lex_matches_window_scan_oracle(self, rng, op):
        fn = dilate if op == "dilate" else erode
        for se in (square_se(3), cross_se(5)):
            for _ in range(4):
                img = random_quantized(rng, 8, 6, palette=13)
                assert fn(img, se, LexOrder()).equals(oracle_morph(img, se, "lex", op))

    @pytest.mark.parametrize("op", ["dilate", "erode"])
    def test_rank_order_matches_window_scan_oracle(self, rng, op):
        fn = dilate if op == "dilate" else erode
        for _ in range(6):
            img = random_quantized(rng, 7, 7, palette=10)
            values = distinct_values(img)
            perm = rng.permutation(len(values))
            order = RankOrder([values[i] for i in perm])
            got = fn(img, square_se(3), order)
            assert got.equals(oracle_morph(img, square_se(3), order, op))

    def test_rank_order_must_cover_the_image(self):
        img = VectorImage(np.array([[RED, BLUE]], dtype=float))
        order = RankOrder([RED, BLACK])
        with pytest.raises(ValueError, match="outside order support"):
            dilate(img, H3, order)


class TestOperatorLaws:
    def test_open_is_dilation_after_erosion(self, rng):
        img = random_quantized(rng, 6, 6, palette=8)
        se = cross_se(3)
        assert open_(img, se, LexOrder()).equals(
            dilate(erode(img, se, LexOrder()), se, LexOrder())
        )

    def test_close_is_erosion_after_dilation(self, rng):
        img = random_quantized(rng, 6, 6, palette=8)
        se = cross_se(3)
        assert close_(img, se, LexOrder()).equals(
            erode(dilate(img, se, LexOrder()), se, LexOrder())
        )

    def test_constant_image_is_a_fixed_point(self):
        img = VectorImage(np.full((4, 5, 3), 0.25))
        for fn in (dilate, erode, open_, close_):
            assert fn(img, square_se(3), LexOrder()).equals(img)
            assert fn(img, square_se(3), MarginalOrder()).equals(img)

    @pytest.mark.parametrize("se", [square_se(3), cross_se(3), cross_se(5)])
    def test_open_and_close_are_idempotent(self, rng, se):
        for _ in range(8):
            img = random_quantized(rng, 9, 8, palette=14)
            values = distinct_values(img)
            perm = rng.permutation(len(values))
            for order in (LexOrder(), RankOrder([values[i] for i in perm])):
                once = open_(img, se, order)
                assert open_(once, se, order).equals(once)
                once = close_(img, se, order)
                assert close_(once, se, order).equals(once)

    def test_dilation_is_extensive_when_origin_in_se(self, rng):
        img = random_quantized(rng, 8, 8, palette=12)
        lex = LexOrder()
        assert compare_pixelwise(dilate(img, square_se(3), lex), img, lex.compare) <= {0, 1}
        assert compare_pixelwise(erode(img, square_se(3), lex), img, lex.compare) <= {-1, 0}

    def test_open_under_close_over(self, rng):
        img = random_quantized(rng, 8, 8, palette=12)
        lex = LexOrder()
        se = square_se(3)
        assert compare_pixelwise(open_(img, se, lex), img, lex.compare) <= {-1, 0}
        assert compare_pixelwise(close_(img, se, lex), img, lex.compare) <= {0, 1}

    def test_total_orders_never_invent_values(self, rng):
        img = random_quantized(rng, 8, 8, palette=6)
        allowed = set(distinct_values(img))
        for fn in (dilate, erode, open_, close_):
            out = fn(img, square_se(3), LexOrder())
            assert set(distinct_values(out)) <= allowed

    def test_marginal_can_invent_values(self):
        img = VectorImage(np.array([[RED, BLUE]], dtype=float))
        out = dilate(img, H3, MarginalOrder())
        assert MAGENTA in distinct_values(out)
        assert MAGENTA not in distinct_values(img)


class TestWindowEdgeCases:
    def test_se_without_origin_still_works_when_windows_stay_nonempty(self, rng):
        se = StructuringElement(((0, -1), (0, 1)))
        img = random_quantized(rng, 1, 6, palette=5)
        got = dilate(img, se, LexOrder())
        assert got.equals(oracle_morph(img, se, "lex", "dilate"))

    def test_empty_window_is_an_error(self):
        # a pure right-shift leaves the first column with nothing to look at
        se = StructuringElement(((0, 1),))
        img = gray([0.1, 0.2, 0.3])
        with pytest.raises(ValueError, match="empty structuring window"):
            dilate(img, se, LexOrder())
        with pytest.raises(ValueError, match="empty structuring window"):
            erode(gray([0.1, 0.2, 0.3]), StructuringElement(((0, -1),)), LexOrder())

    def test_single_pixel_image(self):
        img = VectorImage(np.array([[RED]], dtype=float))
        assert dilate(img, square_se(3), LexOrder()).equals(img)
        assert erode(img, square_se(3), MarginalOrder()).equals(img)

    def test_identity_se(self, rng):
        img = random_quantized(rng, 5, 5, palette=7)
        for order in (LexOrder(), MarginalOrder()):
            assert dilate(img, square_se(1), order).equals(img)
            assert erode(img, square_se(1), order).equals(img)
