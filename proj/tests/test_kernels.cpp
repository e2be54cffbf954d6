#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "unimig/axioms.hpp"
#include "unimig/kernels.hpp"

using namespace unimig;
namespace k = unimig::kernels;

namespace {

/// Buffer with the kernel tail padding, mirroring OperatorTable storage.
struct Padded {
  std::vector<std::uint8_t> bytes;
  explicit Padded(std::vector<std::uint8_t> v) : bytes(std::move(v)) {
    bytes.resize(bytes.size() + k::kPad, 0);
  }
  const std::uint8_t* data() const { return bytes.data(); }
};

}  // namespace

TEST_CASE("every available kernel set matches scalar exactly") {
  const auto sets = k::available_kernels();
  REQUIRE(!sets.empty());
  CHECK(std::string(sets.front()->name) == "scalar");
  INFO("kernel sets available: " << sets.size());

  std::mt19937 rng(42);
  for (int round = 0; round < 3000; ++round) {
    const int len = static_cast<int>(rng() % 81);  // 0..80 covers all tail paths
    std::vector<std::uint8_t> lut_v(std::max(len, 1)), idx_v(len), lhs_v(len), a_v(len),
        b_v(len);
    for (auto& v : lut_v) v = static_cast<std::uint8_t>(rng());
    for (auto& v : idx_v) v = static_cast<std::uint8_t>(rng() % std::max(len, 1));
    for (auto& v : a_v) v = static_cast<std::uint8_t>(rng() % 8);
    for (auto& v : b_v) v = static_cast<std::uint8_t>(rng() % 8);
    // Mostly-matching lhs so mismatches land at controlled positions.
    for (int i = 0; i < len; ++i) lhs_v[i] = lut_v[idx_v[i]];
    if (len > 0 && round % 3 != 0) {
      const int flip = static_cast<int>(rng() % len);
      lhs_v[flip] = static_cast<std::uint8_t>(lhs_v[flip] + 1);
    }

    const Padded lut(lut_v), idx(idx_v), lhs(lhs_v), a(a_v), b(b_v);
    const int want_lut =
        k::scalar_kernels().first_lut_mismatch(lhs.data(), lut.data(), idx.data(), len);
    const int want_gt = k::scalar_kernels().first_greater(a.data(), b.data(), len);
    for (const k::KernelSet* set : sets) {
      CHECK(set->first_lut_mismatch(lhs.data(), lut.data(), idx.data(), len) == want_lut);
      CHECK(set->first_greater(a.data(), b.data(), len) == want_gt);
    }
  }
}

TEST_CASE("crafted positions around block boundaries") {
  for (const int len : {8, 9, 16, 31, 32, 33, 65}) {
    std::vector<std::uint8_t> a(len, 3), b(len, 3);
    for (const int pos : {0, 7, 8, len - 2, len - 1}) {
      if (pos < 0 || pos >= len) continue;
      auto bv = b;
      bv[pos] = 2;  // a[pos] > b[pos]
      const Padded pa(a), pb(bv);
      for (const k::KernelSet* set : k::available_kernels())
        CHECK(set->first_greater(pa.data(), pb.data(), len) == pos);
    }
    const Padded pa(a), pb(b);
    for (const k::KernelSet* set : k::available_kernels())
      CHECK(set->first_greater(pa.data(), pb.data(), len) == -1);
  }
}

TEST_CASE("axiom checks are invariant under the kernel selection") {
  std::mt19937 rng(99);
  std::vector<OperatorTable> tables;
  tables.push_back(discretize(*make_spec(MinOp{}), make_grid(40)));
  tables.push_back(discretize(*make_spec(LukasiewiczOp{}), make_grid(40)));
  for (int round = 0; round < 40; ++round) {
    const int n = 1 + static_cast<int>(rng() % 40);
    OperatorTable t{make_grid(n)};
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= n; ++j) t.set(i, j, static_cast<std::uint8_t>(rng() % (n + 1)));
    tables.push_back(std::move(t));
  }

  const std::string initial = k::active_kernels().name;
  for (const OperatorTable& t : tables) {
    REQUIRE(k::set_active_kernels("scalar"));
    const auto assoc_s = check_associative(t);
    const auto mono_s = check_monotone(t);
    for (const k::KernelSet* set : k::available_kernels()) {
      REQUIRE(k::set_active_kernels(set->name));
      const auto assoc = check_associative(t);
      const auto mono = check_monotone(t);
      CHECK(assoc.ok == assoc_s.ok);
      CHECK(mono.ok == mono_s.ok);
      if (!assoc.ok) {
        CHECK(assoc.witness->x == assoc_s.witness->x);
        CHECK(assoc.witness->y == assoc_s.witness->y);
        CHECK(assoc.witness->z == assoc_s.witness->z);
      }
      if (!mono.ok) {
        CHECK(mono.witness->axis == mono_s.witness->axis);
        CHECK(mono.witness->fixed == mono_s.witness->fixed);
        CHECK(mono.witness->at == mono_s.witness->at);
      }
    }
  }
  REQUIRE(k::set_active_kernels(initial));
  CHECK_FALSE(k::set_active_kernels("no-such-kernel"));
}
