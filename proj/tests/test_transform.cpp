#include <algorithm>
#include <random>
#include <set>

#include <doctest.h>

#include "ndview/transform.hpp"
#include "support/checks.hpp"
#include "support/oracles.hpp"
#include "support/population.hpp"
#include "support/sample_views.hpp"

using namespace ndview;

namespace {

std::multiset<extent_t> address_set(const ViewDescriptor& v) {
    std::multiset<extent_t> out;
    if (v.dimension() == 0) {
        out.insert(v.address_scalar());
        return out;
    }
    for (const auto& c : oracles::all_coordinates(v.shape())) {
        out.insert(v.address(c));
    }
    return out;
}

const std::vector<std::size_t> kIdentity3 = {0, 1, 2};

} // namespace

TEST_CASE("sub-view windows reuse strides and move the offset") {
    const auto v5 = sub_view(sample::v4(), Coordinate{0, 1}, Shape{2, 2});
    CHECK(v5 == sample::v5());

    const auto whole = sub_view(sample::v1(), Coordinate{0, 0}, Shape{3, 2});
    CHECK(whole == sample::v1());

    const auto buf = sample::buffer();
    const auto w = sub_view(sample::v1(), Coordinate{1, 0}, Shape{2, 2});
    CHECK(w.offset() == 101);
    CHECK(tu::vec(w.strides()) == Strides{1, 3});
    CHECK(buf[w.address(Coordinate{0, 0})] == 2);
    CHECK(buf[w.address(Coordinate{0, 1})] == 5);
    CHECK(buf[w.address(Coordinate{1, 0})] == 3);
    CHECK(buf[w.address(Coordinate{1, 1})] == 6);

    CHECK_RAISES(errc::sub_view_out_of_bounds,
                 sub_view(sample::v4(), Coordinate{0, 2}, Shape{2, 2}));
    CHECK_RAISES(errc::rank_mismatch, sub_view(sample::v4(), Coordinate{0}, Shape{2, 2}));
    CHECK_RAISES(errc::rank_mismatch,
                 sub_view(ViewDescriptor::scalar(0), Coordinate{}, Shape{}));

    // a sub-view may carry its own internal order
    const auto reordered = sub_view(sample::v4(), Coordinate{0, 0}, Shape{2, 3},
                                    CoordinateOrder::first_major);
    CHECK(reordered.order() == CoordinateOrder::first_major);
    CHECK(sample::v4().order() == CoordinateOrder::last_major);
}

TEST_CASE("binding fixes one coordinate and drops the axis") {
    CHECK(bind(sample::v3(), 0, 1) == sample::v6());

    const auto v = sample::v4();
    CHECK(bind(v, 1, 0).offset() == v.offset());

    const auto scalar = bind(sample::v6(), 0, 2);
    CHECK(scalar.dimension() == 0);
    CHECK(scalar.address_scalar() == 105);
    CHECK(sample::buffer()[scalar.address_scalar()] == 6);

    CHECK_RAISES(errc::axis_out_of_range, bind(v, 2, 0));
    CHECK_RAISES(errc::axis_out_of_range, bind(ViewDescriptor::scalar(0), 0, 0));
    CHECK_RAISES(errc::value_out_of_range, bind(v, 1, 3));
}

TEST_CASE("squeezing removes every singleton axis") {
    const auto v = ViewDescriptor::strided({5, 1, 5}, {1, 5, 5}, 7);
    const auto s = squeeze(v);
    CHECK(tu::vec(s.shape()) == Shape{5, 5});
    CHECK(tu::vec(s.strides()) == Strides{1, 5});
    CHECK(s.offset() == 7);

    CHECK(squeeze(sample::v1()) == sample::v1());

    const auto all = squeeze(ViewDescriptor::strided({1, 1}, {4, 9}, 3));
    CHECK(all.dimension() == 0);
    CHECK(all.address_scalar() == 3);

    CHECK(squeeze(ViewDescriptor::scalar(2)).dimension() == 0);
}

TEST_CASE("permutation rearranges shape and strides together") {
    const std::vector<std::size_t> swap01 = {1, 0};
    CHECK(permute(sample::v1(), swap01) == sample::v4());

    CHECK(permute(sample::v2(), std::vector<std::size_t>{0, 1}) == sample::v2());

    const auto v = ViewDescriptor::unstrided({3, 2, 4});
    CHECK(tu::vec(permute(v, std::vector<std::size_t>{1, 0, 2}).shape()) == Shape{2, 3, 4});

    CHECK_RAISES(errc::not_a_permutation, permute(v, std::vector<std::size_t>{0, 0, 1}));
    CHECK_RAISES(errc::not_a_permutation, permute(v, std::vector<std::size_t>{0, 1, 3}));
    CHECK_RAISES(errc::rank_mismatch, permute(v, std::vector<std::size_t>{0, 1}));
    CHECK_RAISES(errc::rank_mismatch, permute(ViewDescriptor::scalar(0), {}));
}

TEST_CASE("transpositions swap two axes") {
    const auto v = ViewDescriptor::unstrided({2, 3, 4});
    CHECK(tu::vec(transpose(v, 0, 2).shape()) == Shape{4, 3, 2});
    CHECK(transpose(v, 1, 1) == v);
    CHECK(transpose(sample::v2(), 0, 1) == sample::v3());
    CHECK_RAISES(errc::axis_out_of_range, transpose(v, 0, 3));
}

TEST_CASE("full transposition reverses the axis sequence") {
    CHECK(tu::vec(transpose_all(ViewDescriptor::unstrided({2, 4, 3})).shape()) == Shape{3, 4, 2});
    const auto one = ViewDescriptor::strided({5}, {2}, 1);
    CHECK(transpose_all(one) == one);
    const auto v = sample::v3();
    CHECK(transpose_all(transpose_all(v)) == v);
    CHECK_RAISES(errc::rank_mismatch, transpose_all(ViewDescriptor::scalar(0)));
}

TEST_CASE("cyclic shifts rotate the axis sequence") {
    const auto v = ViewDescriptor::unstrided({2, 3, 7});
    CHECK(tu::vec(cyclic_shift(v, 1).shape()) == Shape{7, 2, 3});
    CHECK(tu::vec(cyclic_shift(v, -1).shape()) == Shape{3, 7, 2});
    CHECK(cyclic_shift(v, 0) == v);
    CHECK(cyclic_shift(v, 3) == v);
    CHECK(cyclic_shift(v, -3) == v);
    CHECK(cyclic_shift(v, 7) == cyclic_shift(v, 1));
    CHECK(cyclic_shift(v, -8) == cyclic_shift(v, 1));

    const auto w = ViewDescriptor::unstrided({4, 3, 2});
    const auto w1 = cyclic_shift(w, -1);
    CHECK(tu::vec(w1.shape()) == Shape{3, 2, 4});
    CHECK(tu::vec(cyclic_shift(w1, 2).shape()) == Shape{2, 4, 3});

    CHECK_RAISES(errc::rank_mismatch, cyclic_shift(ViewDescriptor::scalar(0), 1));
}

TEST_CASE("reshape keeps the scalar-index-to-element mapping of unstrided views") {
    const auto v = ViewDescriptor::unstrided({3, 2, 4}, 5);
    const auto r = reshape_view(v, Shape{2, 2, 3, 2});
    CHECK(tu::vec(r.shape()) == Shape{2, 2, 3, 2});
    CHECK(tu::vec(r.strides()) == Strides{1, 2, 4, 12});
    CHECK(r.offset() == 5);
    for (extent_t k = 0; k < v.size(); ++k) {
        CHECK(r.address_of_index(k) == v.address_of_index(k));
    }

    CHECK(reshape_view(v, Shape{3, 2, 4}) == v);
    CHECK_RAISES(errc::size_mismatch, reshape_view(v, Shape{5, 5}));
    CHECK_RAISES(errc::not_unstrided, reshape_view(sample::v2(), Shape{6}));

    // a scalar view reshapes to any all-singleton shape and back
    const auto s = reshape_view(ViewDescriptor::scalar(4), Shape{1, 1});
    CHECK(tu::vec(s.shape()) == Shape{1, 1});
    CHECK(reshape_view(s, Shape{}).dimension() == 0);
}

TEST_CASE("axis rearrangements preserve the address set") {
    std::mt19937 rng(31);
    population::for_each_shape(3, 4, [&](const Shape& shape) {
        population::for_each_view(shape, rng, 1, [&](const ViewDescriptor& v) {
            const auto expect = address_set(v);
            std::vector<std::size_t> sigma(v.dimension());
            for (std::size_t j = 0; j < sigma.size(); ++j) sigma[j] = sigma.size() - 1 - j;
            CHECK(address_set(permute(v, sigma)) == expect);
            CHECK(address_set(transpose(v, 0, v.dimension() - 1)) == expect);
            CHECK(address_set(transpose_all(v)) == expect);
            CHECK(address_set(cyclic_shift(v, 1)) == expect);
            CHECK(address_set(cyclic_shift(v, -2)) == expect);
            CHECK(address_set(squeeze(v)) == expect);
            if (v.is_unstrided()) {
                CHECK(address_set(reshape_view(v, Shape{v.size()})) == expect);
            }
        });
    });
}

TEST_CASE("sub-views and bindings select subsets of the address set") {
    std::mt19937 rng(32);
    population::for_each_shape(3, 3, [&](const Shape& shape) {
        population::for_each_view(shape, rng, 1, [&](const ViewDescriptor& v) {
            const auto parent = address_set(v);

            Shape window(shape);
            Coordinate base(shape.size(), 0);
            for (auto& s : window) s = (s + 1) / 2;
            const auto sub = sub_view(v, base, window);
            for (const auto& c : oracles::all_coordinates(window)) {
                CHECK(parent.count(sub.address(c)) > 0);
            }

            const std::size_t axis = shape.size() - 1;
            const extent_t value = shape[axis] - 1;
            const auto bound = bind(v, axis, value);
            std::multiset<extent_t> expect;
            for (const auto& c : oracles::all_coordinates(shape)) {
                if (c[axis] == value) expect.insert(v.address(c));
            }
            CHECK(address_set(bound) == expect);
        });
    });
}

TEST_CASE("rank changes follow each transform's law") {
    std::mt19937 rng(33);
    population::for_each_shape(4, 3, [&](const Shape& shape) {
        population::for_each_view(shape, rng, 1, [&](const ViewDescriptor& v) {
            CHECK(bind(v, 0, 0).dimension() == v.dimension() - 1);
            const auto s = squeeze(v);
            for (extent_t e : s.shape()) CHECK(e > 1);
            CHECK(cyclic_shift(v, 1).dimension() == v.dimension());
            CHECK(transpose_all(v).dimension() == v.dimension());
        });
    });
}

TEST_CASE("shifts and permutations compose to the identity") {
    std::mt19937 rng(34);
    std::uniform_int_distribution<std::int64_t> zdist(-7, 7);
    population::for_each_shape(4, 3, [&](const Shape& shape) {
        population::for_each_view(shape, rng, 1, [&](const ViewDescriptor& v) {
            const std::int64_t z = zdist(rng);
            CHECK(cyclic_shift(cyclic_shift(v, z), -z) == v);

            std::vector<std::size_t> sigma(v.dimension());
            for (std::size_t j = 0; j < sigma.size(); ++j) sigma[j] = j;
            std::shuffle(sigma.begin(), sigma.end(), rng);
            std::vector<std::size_t> inverse(sigma.size());
            for (std::size_t j = 0; j < sigma.size(); ++j) inverse[sigma[j]] = j;
            CHECK(permute(permute(v, sigma), inverse) == v);
        });
    });
}

TEST_CASE("transform outputs read the same elements as their inputs") {
    std::mt19937 rng(35);
    population::for_each_shape(3, 3, [&](const Shape& shape) {
        population::for_each_view(shape, rng, 1, [&](const ViewDescriptor& v) {
            const std::size_t d = v.dimension();

            // permutation: output coordinate c' reads input coordinate c with
            // c[sigma[j]] = c'[j]
            std::vector<std::size_t> sigma(d);
            for (std::size_t j = 0; j < d; ++j) sigma[j] = j;
            std::shuffle(sigma.begin(), sigma.end(), rng);
            const auto p = permute(v, sigma);
            for (const auto& cp : oracles::all_coordinates(p.shape())) {
                Coordinate c(d);
                for (std::size_t j = 0; j < d; ++j) c[sigma[j]] = cp[j];
                CHECK(p.address(cp) == v.address(c));
            }

            // cyclic shift by z: output axis j is input axis (j - z) mod d
            const std::int64_t z = 1;
            const auto sh = cyclic_shift(v, z);
            for (const auto& cp : oracles::all_coordinates(sh.shape())) {
                Coordinate c(d);
                for (std::size_t j = 0; j < d; ++j) {
                    const std::size_t src = (j + d - 1) % d;
                    c[src] = cp[j];
                }
                CHECK(sh.address(cp) == v.address(c));
            }

            // binding: output coordinate c' reads input with the bound value
            // inserted at the axis
            const std::size_t axis = d / 2;
            const extent_t value = v.shape()[axis] / 2;
            const auto b = bind(v, axis, value);
            for (const auto& cp : oracles::all_coordinates(b.shape())) {
                Coordinate c;
                c.insert(c.end(), cp.begin(), cp.begin() + static_cast<std::ptrdiff_t>(axis));
                c.push_back(value);
                c.insert(c.end(), cp.begin() + static_cast<std::ptrdiff_t>(axis), cp.end());
                if (b.dimension() == 0) {
                    CHECK(b.address_scalar() == v.address(c));
                } else {
                    CHECK(b.address(cp) == v.address(c));
                }
            }

            // sub-view: output coordinate c' reads input base + c'
            Coordinate base(d);
            Shape window(d);
            for (std::size_t j = 0; j < d; ++j) {
                base[j] = v.shape()[j] / 2;
                window[j] = v.shape()[j] - base[j];
            }
            const auto sub = sub_view(v, base, window);
            for (const auto& cp : oracles::all_coordinates(window)) {
                Coordinate c(d);
                for (std::size_t j = 0; j < d; ++j) c[j] = base[j] + cp[j];
                CHECK(sub.address(cp) == v.address(c));
            }
        });
    });
}

TEST_CASE("transforms leave invariants intact") {
    std::mt19937 rng(36);
    population::for_each_shape(3, 3, [&](const Shape& shape) {
        population::for_each_view(shape, rng, 1, [&](const ViewDescriptor& v) {
            CHECK(check_invariants(squeeze(v)).ok());
            CHECK(check_invariants(transpose_all(v)).ok());
            CHECK(check_invariants(cyclic_shift(v, -1)).ok());
            CHECK(check_invariants(bind(v, 0, 0)).ok());
            if (v.is_unstrided()) {
                CHECK(check_invariants(reshape_view(v, Shape{v.size()})).ok());
            }
        });
    });
}
