#pragma once

// Gadget games H1..H5 and the reductions G0..G5 built on top of a bilinear
// system, together with lifting solutions to profiles and back.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nashgadgets/game.hpp"
#include "nashgadgets/systems.hpp"

namespace nashgadgets {

inline const std::string kBot = "⊥";

enum class GadgetKind { kH1, kH2, kH3, kH4, kH5, kG0, kG1, kG2, kG3, kG4, kG5 };

struct GadgetId {
  GadgetKind kind = GadgetKind::kH1;
  Rational u = 0;  // H1, H3, H4
  int k = 2;       // H2
};

/// Lower-case name used by files and the CLI ("h1", "g4", ...).
std::string gadget_name(GadgetKind kind);
GadgetKind parse_gadget_kind(const std::string& name);

StrategicGame build_H1(const Rational& u);
StrategicGame build_H2(int k);
StrategicGame build_H3(const Rational& u);
StrategicGame build_H4(const Rational& u);
StrategicGame build_H5();
/// Dispatches on an H tag; BadParameter for u < 0, k < 2 or a G tag.
StrategicGame build_H(const GadgetId& id);

StrategicGame build_G0(const BilinearSystem& bsys);
/// Adds the action ⊥ to every player of g0; cells involving ⊥ copy h with
/// non-⊥ actions translated to G. With `simple_bot` every such cell pays 0.
StrategicGame extend_with_hgadget(const StrategicGame& g0, const StrategicGame& h, bool simple_bot = false);
/// Splits the ⊥ of Players 2 and 3 of a G1 game into (⊥,0..k-1).
StrategicGame build_G2(const StrategicGame& g1);
/// Splits every ⊥ of a G1 game into (⊥,1),(⊥,2) perturbed by H5 / 6.
StrategicGame build_G5(const StrategicGame& g1);
/// Full pipeline from a bilinear system to any G game.
StrategicGame build_G(GadgetKind kind, const BilinearSystem& bsys, bool simple_bot = false);

/// True for ⊥ and every (⊥,i) action label.
bool is_bot_label(const std::string& label);

/// Player 1 uniform over the G0 actions, Players 2 and 3 on x and y.
/// NotASolution when some q_k(x, y) is nonzero.
MixedProfile lift_solution(const BilinearSystem& bsys, const std::vector<QuadAlgebraic>& x,
                           const std::vector<QuadAlgebraic>& y, const StrategicGame& target);

/// Players 2 and 3 conditioned on their G0 actions; nullopt (no mass) when
/// either of them plays the ⊥ family with probability 1.
std::optional<std::pair<std::vector<QuadAlgebraic>, std::vector<QuadAlgebraic>>> project_profile(
    const StrategicGame& game, const MixedProfile& x);

}  // namespace nashgadgets
