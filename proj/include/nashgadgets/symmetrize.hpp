#pragma once

// Symmetrization of G0: the positive shifts G+ and G'+, the block games
// D0 / D'0 and their ⊥ extensions D1, D4, D'1.

#include <array>
#include <utility>
#include <vector>

#include "nashgadgets/game.hpp"
#include "nashgadgets/systems.hpp"

namespace nashgadgets {

struct SymmetrizationInfo {
  Rational M;  // integer valued
  Rational K;  // 2M/9
};

/// Smallest positive integer M with -M < u1 < M on every cell of g0.
SymmetrizationInfo symmetrization_info(const StrategicGame& g0);

std::pair<StrategicGame, SymmetrizationInfo> build_Gplus(const StrategicGame& g0);
StrategicGame build_GplusPrime(const StrategicGame& g0);

enum class D0Variant { kRoleSum, kRolePrime };
enum class DVariant { kD1, kD4, kDPrime1 };

/// Symmetric game on S1 ⊔ S2 ⊔ S3; labels carry an "S<block>:" prefix.
StrategicGame build_D0(const StrategicGame& gplus, D0Variant variant);
/// Adds a shared ⊥ action. BadVariantSource when D1/D4 is asked of a D'0
/// game or D'1 of a D0 game.
StrategicGame extend_symmetric(const StrategicGame& d0, const SymmetrizationInfo& info, DVariant variant);

/// Symmetric profile (y,y,y) with y = z/3 ⊕ x/3 ⊕ x/3, z uniform on S1.
MixedProfile lift_symmetric(const BilinearSystem& bsys, const std::vector<QuadAlgebraic>& x,
                            const StrategicGame& target);
/// Player 1 takes z on S1, Player 2 x on S2, Player 3 x on S3.
MixedProfile lift_role_assigned(const BilinearSystem& bsys, const std::vector<QuadAlgebraic>& x,
                                const StrategicGame& target);

struct BlockProjection {
  std::array<Strategy, 3> conditional;  // empty when the block has no mass
  std::array<QuadAlgebraic, 3> mass;
  std::array<bool, 3> empty{};
};

BlockProjection project_symmetric(const StrategicGame& d, const Strategy& y);

/// Block (1..3) of a D-game action label, 0 for ⊥.
int block_of_label(const std::string& label);

}  // namespace nashgadgets
