#include <cmath>

#include "doctest.h"
#include "maskpoints/field_ops.hpp"
#include "maskpoints/rng.hpp"
#include "oracles.hpp"

using namespace maskpoints;

TEST_CASE("bilinear_sample") {
  FeatureField field(1, 2, 2);
  field.at(0, 0, 0) = 0;
  field.at(0, 0, 1) = 2;
  field.at(0, 1, 0) = 4;
  field.at(0, 1, 1) = 6;

  SUBCASE("integer coordinates read the cell") {
    CHECK(bilinear_sample(field, 0, 0)[0] == 0);
    CHECK(bilinear_sample(field, 1, 0)[0] == 2);
    CHECK(bilinear_sample(field, 0, 1)[0] == 4);
    CHECK(bilinear_sample(field, 1, 1)[0] == 6);
  }

  SUBCASE("midpoint averages the four cells") {
    CHECK(bilinear_sample(field, 0.5, 0.5)[0] == 3.0);
  }

  SUBCASE("outside coordinates clamp to the border") {
    CHECK(bilinear_sample(field, -5, -5)[0] == 0);
    CHECK(bilinear_sample(field, 10, 10)[0] == 6);
  }

  SUBCASE("random fractions match the closed-form oracle") {
    Pcg32 rng(17);
    FeatureField big(3, 7, 9);
    std::vector<std::vector<double>> grids(3,
                                           std::vector<double>(7 * 9, 0.0));
    for (int ch = 0; ch < 3; ++ch) {
      for (int r = 0; r < 7; ++r) {
        for (int c = 0; c < 9; ++c) {
          const double v = 10.0 * rng.next_double();
          big.at(ch, r, c) = v;
          grids[ch][r * 9 + c] = v;
        }
      }
    }
    for (int trial = 0; trial < 200; ++trial) {
      const double x = -1.0 + 11.0 * rng.next_double();
      const double y = -1.0 + 9.0 * rng.next_double();
      const auto got = bilinear_sample(big, x, y);
      for (int ch = 0; ch < 3; ++ch) {
        CHECK(got[ch] ==
              doctest::Approx(oracles::brute_bilinear(grids[ch], 7, 9, x, y))
                  .epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("bilinear_sample is linear along grid axes") {
  FeatureField field(1, 4, 4);
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) field.at(0, r, c) = 3.0 * c - 2.0 * r;
  }
  Pcg32 rng(19);
  for (int trial = 0; trial < 100; ++trial) {
    const double x = 3.0 * rng.next_double();
    const double y = 3.0 * rng.next_double();
    CHECK(bilinear_sample(field, x, y)[0] ==
          doctest::Approx(3.0 * x - 2.0 * y).epsilon(1e-12));
  }
}

TEST_CASE("group_pool") {
  SUBCASE("worked example") {
    const std::vector<std::vector<double>> features = {{1}, {5}, {2}, {3}};
    CHECK(group_pool(features, {2}) == std::vector<double>{5, 3});
  }

  SUBCASE("k = n is the identity concatenation") {
    const std::vector<std::vector<double>> features = {{1, 9}, {5, 2}, {2, 7}};
    CHECK(group_pool(features, {3}) == std::vector<double>{1, 9, 5, 2, 2, 7});
  }

  SUBCASE("k above n is a config error") {
    CHECK_THROWS_AS(group_pool({{1}, {2}}, {3}), Error);
  }

  SUBCASE("permutations within a group leave the output unchanged") {
    std::vector<std::vector<double>> features = {{1, 4}, {7, 2}, {3, 3},
                                                 {9, 1}, {2, 8}, {5, 5}};
    const auto reference = group_pool(features, {2});  // groups of 3
    std::swap(features[0], features[2]);
    std::swap(features[4], features[5]);
    CHECK(group_pool(features, {2}) == reference);
    // Across groups it does change.
    std::swap(features[0], features[3]);
    CHECK(group_pool(features, {2}) != reference);
  }

  SUBCASE("short final group per the contiguous partition") {
    const std::vector<std::vector<double>> features = {{1}, {5}, {2}, {3}, {9}};
    // ceil(5/2) = 3: groups {1,5,2} and {3,9}.
    CHECK(group_pool(features, {2}) == std::vector<double>{5, 9});
  }
}

TEST_CASE("apply_offset_fields") {
  SUBCASE("constant fields translate every point") {
    OffsetFieldStack stack(3, 4, 4);
    for (int i = 0; i < 3; ++i) {
      for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) {
          stack.fields.at(2 * i, r, c) = 1.5;
          stack.fields.at(2 * i + 1, r, c) = -0.5;
        }
      }
    }
    const DensePointSet pts({{1, 1, 0.3}, {2, 2, 0.7}, {0.5, 3.0, 1.0}});
    const DensePointSet moved = apply_offset_fields(stack, pts);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      CHECK(moved[i].x == pts[i].x + 1.5);
      CHECK(moved[i].y == pts[i].y - 0.5);
      CHECK(moved[i].a == pts[i].a);
    }
  }

  SUBCASE("zero fields are the identity") {
    OffsetFieldStack stack(2, 4, 4);
    const DensePointSet pts({{1.25, 2.75, 0.5}, {3, 0, 1.0}});
    const DensePointSet moved = apply_offset_fields(stack, pts);
    for (std::size_t i = 0; i < pts.size(); ++i) CHECK(moved[i] == pts[i]);
  }

  SUBCASE("field i only affects point i") {
    OffsetFieldStack stack(3, 4, 4);
    Pcg32 rng(23);
    for (int ch = 0; ch < 6; ++ch) {
      for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) {
          stack.fields.at(ch, r, c) = 5.0 * rng.next_double();
        }
      }
    }
    // Overwrite field 1 with the constant (1, 0).
    for (int r = 0; r < 4; ++r) {
      for (int c = 0; c < 4; ++c) {
        stack.fields.at(2, r, c) = 1.0;
        stack.fields.at(3, r, c) = 0.0;
      }
    }
    const DensePointSet pts({{0.5, 0.5, 1}, {2, 2, 1}, {3, 1, 1}});
    const DensePointSet moved = apply_offset_fields(stack, pts);
    CHECK(moved[1].x == 3.0);
    CHECK(moved[1].y == 2.0);
    // Changing other fields leaves point 1 untouched.
    stack.fields.at(0, 1, 1) += 3.0;
    stack.fields.at(5, 2, 2) -= 2.0;
    const DensePointSet moved2 = apply_offset_fields(stack, pts);
    CHECK(moved2[1].x == 3.0);
    CHECK(moved2[1].y == 2.0);
  }

  SUBCASE("count mismatch") {
    OffsetFieldStack stack(2, 4, 4);
    const DensePointSet pts({{1, 1, 1}});
    CHECK_THROWS_AS(apply_offset_fields(stack, pts), Error);
  }

  SUBCASE("adding t to the field values translates outputs by t") {
    OffsetFieldStack stack(2, 5, 5);
    Pcg32 rng(29);
    for (int ch = 0; ch < 4; ++ch) {
      for (int r = 0; r < 5; ++r) {
        for (int c = 0; c < 5; ++c) {
          stack.fields.at(ch, r, c) = 4.0 * rng.next_double() - 2.0;
        }
      }
    }
    const DensePointSet pts({{1.3, 2.1, 1}, {3.7, 0.4, 1}});
    const DensePointSet base = apply_offset_fields(stack, pts);
    const double tx = 2.25, ty = -1.5;
    for (int i = 0; i < 2; ++i) {
      for (int r = 0; r < 5; ++r) {
        for (int c = 0; c < 5; ++c) {
          stack.fields.at(2 * i, r, c) += tx;
          stack.fields.at(2 * i + 1, r, c) += ty;
        }
      }
    }
    const DensePointSet moved = apply_offset_fields(stack, pts);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      CHECK(moved[i].x == doctest::Approx(base[i].x + tx).epsilon(1e-12));
      CHECK(moved[i].y == doctest::Approx(base[i].y + ty).epsilon(1e-12));
    }
  }
}

TEST_CASE("sample_attribute_map") {
  SUBCASE("s = 1 reduces to bilinear_sample") {
    AttributeMapStack stack(1, 6, 6);
    Pcg32 rng(37);
    for (int r = 0; r < 6; ++r) {
      for (int c = 0; c < 6; ++c) {
        stack.maps.at(0, r, c) = rng.next_double();
      }
    }
    const Box box(0, 0, 5, 5);
    const DensePointSet pts({{1.2, 3.4, 1}, {4.9, 0.1, 1}});
    const auto scores = sample_attribute_map(stack, pts, box);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      CHECK(scores[i] == bilinear_sample(stack.maps, pts[i].x, pts[i].y)[0]);
    }
  }

  SUBCASE("bin isolation in the top-left quadrant") {
    AttributeMapStack stack(2, 8, 8);
    for (int ch = 0; ch < 4; ++ch) {
      for (int r = 0; r < 8; ++r) {
        for (int c = 0; c < 8; ++c) {
          stack.maps.at(ch, r, c) = ch * 10.0;
        }
      }
    }
    const Box box(0, 0, 8, 8);
    const DensePointSet pts({{1.0, 1.0, 1}});  // top-left quadrant -> bin 0
    CHECK(sample_attribute_map(stack, pts, box)[0] == 0.0);
    // Altering other bins leaves the score unchanged.
    for (int ch = 1; ch < 4; ++ch) {
      for (int r = 0; r < 8; ++r) {
        for (int c = 0; c < 8; ++c) stack.maps.at(ch, r, c) = -99.0;
      }
    }
    CHECK(sample_attribute_map(stack, pts, box)[0] == 0.0);
    // Altering bin 0 moves it.
    stack.maps.at(0, 1, 1) = 8.0;
    CHECK(sample_attribute_map(stack, pts, box)[0] == 8.0);
  }

  SUBCASE("constant maps return the constant") {
    AttributeMapStack stack(3, 6, 6);
    for (int ch = 0; ch < 9; ++ch) {
      for (int r = 0; r < 6; ++r) {
        for (int c = 0; c < 6; ++c) stack.maps.at(ch, r, c) = 0.75;
      }
    }
    const Box box(0.5, 0.5, 5.5, 5.5);
    const DensePointSet pts({{0.5, 0.5, 1}, {3.2, 4.4, 1}, {5.5, 5.5, 1}});
    for (const double v : sample_attribute_map(stack, pts, box)) {
      CHECK(v == 0.75);
    }
  }

  SUBCASE("points outside the box are rejected") {
    AttributeMapStack stack(2, 6, 6);
    const Box box(0, 0, 4, 4);
    const DensePointSet pts({{5, 2, 1}});
    CHECK_THROWS_AS(sample_attribute_map(stack, pts, box), Error);
  }
}

TEST_CASE("head_cost degrees and ratios") {
  const int channels = 256;
  const int k = 9;

  SUBCASE("shared offset is linear, concat regression quadratic") {
    const auto lin = [&](int n) {
      return head_cost(n, k, channels, HeadMode::SharedOffsetRegression);
    };
    const auto quad = [&](int n) {
      return head_cost(n, k, channels, HeadMode::ConcatRegression);
    };
    CHECK(lin(81) == 9 * lin(9));
    CHECK(quad(81) == 81 * quad(9));
  }

  SUBCASE("group pooling is constant in n") {
    CHECK(head_cost(81, k, channels, HeadMode::GroupPoolClassification) ==
          head_cost(9, k, channels, HeadMode::GroupPoolClassification));
  }

  SUBCASE("concat classification is linear in n") {
    CHECK(head_cost(81, k, channels, HeadMode::ConcatClassification) ==
          9 * head_cost(9, k, channels, HeadMode::ConcatClassification));
  }

  SUBCASE("exact polynomial degrees via finite ratios") {
    for (const auto [mode, degree] :
         {std::pair{HeadMode::GroupPoolClassification, 0},
          std::pair{HeadMode::ConcatClassification, 1},
          std::pair{HeadMode::SharedOffsetRegression, 1},
          std::pair{HeadMode::ConcatRegression, 2}}) {
      const double c1 = static_cast<double>(head_cost(10, k, channels, mode));
      const double c2 = static_cast<double>(head_cost(20, k, channels, mode));
      const double c4 = static_cast<double>(head_cost(40, k, channels, mode));
      CHECK(c2 / c1 == doctest::Approx(std::pow(2.0, degree)));
      CHECK(c4 / c2 == doctest::Approx(std::pow(2.0, degree)));
    }
  }

  SUBCASE("efficient head total is nearly flat, baseline superlinear") {
    auto efficient = [&](int n) {
      return head_cost(n, k, channels, HeadMode::GroupPoolClassification) +
             head_cost(n, k, channels, HeadMode::SharedOffsetRegression);
    };
    auto baseline = [&](int n) {
      return head_cost(n, k, channels, HeadMode::ConcatClassification) +
             head_cost(n, k, channels, HeadMode::ConcatRegression);
    };
    const double rise = static_cast<double>(efficient(81)) / efficient(9);
    CHECK(rise < 1.10);
    CHECK(static_cast<double>(baseline(81)) / baseline(9) > 2.0);
  }

  SUBCASE("csv emission") {
    const std::string csv = head_cost_csv({9, 25}, 9, 16);
    CHECK(csv.find("n,k,mode,macs\n") == 0);
    CHECK(csv.find("9,9,group_pool_cls,2304") != std::string::npos);
    CHECK(csv.find("25,9,shared_offset_reg,800") != std::string::npos);
  }
}
