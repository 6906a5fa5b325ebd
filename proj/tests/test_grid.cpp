#include <doctest.h>

#include <functional>

#include "rainbow/grid.hpp"

using namespace rainbow;

namespace {

ErrorKind kind_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected an Error");
    return ErrorKind::Internal;
}

} // namespace

TEST_CASE("validate accepts the inline examples") {
    LatinRectangle r = LatinRectangle::validate({{0, 1, 2}, {2, 0, 1}});
    CHECK(r.rows() == 2);
    CHECK(r.cols() == 3);
    CHECK(r.at(1, 0) == 2);

    LatinRectangle l2 = LatinRectangle::validate({{0, 1}, {1, 0}});
    CHECK(l2.is_square());
}

TEST_CASE("validate rejects bad grids with the right error kinds") {
    CHECK(kind_of([] { LatinRectangle::validate({{0, 1}, {0, 1}}); }) ==
          ErrorKind::DuplicateInColumn);
    CHECK(kind_of([] { LatinRectangle::validate({{0, 0}, {1, 1}}); }) == ErrorKind::DuplicateInRow);
    CHECK(kind_of([] { LatinRectangle::validate({{0, 2}, {1, 0}}); }) ==
          ErrorKind::SymbolOutOfRange);
    CHECK(kind_of([] { LatinRectangle::validate({{0, -1}, {1, 0}}); }) ==
          ErrorKind::SymbolOutOfRange);
    // more rows than columns cannot satisfy the column condition
    CHECK(kind_of([] { LatinRectangle::validate({{0, 1}, {1, 0}, {0, 1}}); }) ==
          ErrorKind::InvalidDimensions);
}

TEST_CASE("text format round-trips") {
    LatinRectangle r = LatinRectangle::validate({{0, 1, 2}, {2, 0, 1}});
    CHECK(r.format() == "2 3\n0 1 2\n2 0 1\n");
    CHECK(LatinRectangle::parse(r.format()) == r);
}

TEST_CASE("parse rejects malformed input") {
    CHECK(kind_of([] { LatinRectangle::parse(""); }) == ErrorKind::Parse);
    CHECK(kind_of([] { LatinRectangle::parse("2 2\n0 1\n1"); }) == ErrorKind::Parse);
    CHECK(kind_of([] { LatinRectangle::parse("2 2\n0 1\n1 0\n7"); }) == ErrorKind::Parse);
    CHECK(kind_of([] { LatinRectangle::parse("2 2\n0 x\n1 0"); }) == ErrorKind::Parse);
    // the "." empty-cell variant is reserved and rejected
    CHECK(kind_of([] { LatinRectangle::parse("2 2\n0 .\n1 0"); }) ==
          ErrorKind::EmptyCellUnsupported);
    // parsed grids still go through validation
    CHECK(kind_of([] { LatinRectangle::parse("2 2\n0 1\n0 1"); }) == ErrorKind::DuplicateInColumn);
}

TEST_CASE("sub-array views check their index lists") {
    LatinRectangle r = LatinRectangle::validate({{0, 1, 2}, {2, 0, 1}});
    SubArrayView v(r, {0, 1}, {0, 2});
    CHECK(v.at(1, 1) == 1);
    CHECK(v.block().cells == std::vector<int>{0, 2, 2, 1});

    CHECK(kind_of([&] { SubArrayView(r, {1, 0}, {0}); }) == ErrorKind::BadView);
    CHECK(kind_of([&] { SubArrayView(r, {0, 0}, {0}); }) == ErrorKind::BadView);
    CHECK(kind_of([&] { SubArrayView(r, {0}, {3}); }) == ErrorKind::BadView);
    CHECK(kind_of([&] { SubArrayView(r, {0}, {}); }) == ErrorKind::BadView);
}

TEST_CASE("full view covers the whole rectangle") {
    LatinRectangle r = LatinRectangle::validate({{0, 1, 2}, {2, 0, 1}});
    SubArrayView v(r);
    CHECK(v.rows() == 2);
    CHECK(v.cols() == 3);
    CHECK(v.block().cells == r.cells());
}
