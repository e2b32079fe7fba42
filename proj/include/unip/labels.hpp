#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "unip/diagram.hpp"

namespace unip {

/// The ten real labels plus the five complex ones. CLI spellings in comments.
enum class Label {
  AR,     // A^R   GL_n(R)
  AH,     // A^H   GL_{n/2}(H)
  A,      // A     U(p,q)
  At,     // Ã     U~(p,q)
  B,      // B     SO(p,q), p+q odd
  D,      // D     SO(p,q), p+q even
  C,      // C     Sp_{2n}(R)
  Ct,     // C̃     Sp~_{2n}(R)
  Dstar,  // D*    SO*(2n)
  Cstar,  // C*    Sp(p/2,q/2)
  AC,     // A^C   GL_n(C)
  BC,     // B^C   SO_{2n+1}(C)
  DC,     // D^C   SO_{2n}(C)
  CC,     // C^C   Sp_{2n}(C)
  CtC,    // C̃^C   Sp_{2n}(C), metaplectic dual
};

bool is_complex(Label star);
/// Complex labels behave like their real pattern for all parity logic.
Label real_pattern(Label star);

std::string_view label_name(Label star);
std::optional<Label> parse_label(std::string_view text);

/// Family of the dual Lie algebra ǧ (where the orbit diagram lives).
Family dual_family(Label star);
/// Family of g itself (where the Barbasch-Vogan dual lands).
Family g_family(Label star);

/// Number of positive roots of g at rank n.
long long positive_roots(Label star, int n);

/// Very-even variant marker for D-family orbits.
enum class Variant { Unique, I, II };

/// A dual nilpotent orbit: label, diagram, optional very-even variant.
struct OrbitSpec {
  Label star = Label::C;
  YoungDiagram d;
  Variant variant = Variant::Unique;
};

bool is_very_even(const OrbitSpec& spec);

/// Throws InvalidOrbit / VariantRequired / WrongLabel on a malformed spec.
void validate_orbit_spec(const OrbitSpec& spec);

/// Real classical group form. Signature labels (A, Ã, B, D, C*) carry (p,q);
/// rank labels (A^R, A^H, C, C̃, D*) carry n.
struct GroupForm {
  Label label = Label::C;
  int p = 0, q = 0;  // signature labels
  int n = 0;         // rank labels; for signature labels n is the rank of g

  static GroupForm signature(Label label, int p, int q);
  static GroupForm rank(Label label, int n);
  bool uses_signature() const;
};

std::string to_string(const GroupForm& g);

/// "SO:2,1", "Sp:4", "tSp:4", "U:1,1", "tU:1,1", "GL:3", "GLH:2",
/// "SOstar:4", "SpH:2,2". The rank after Sp/tSp/SOstar is 2n.
GroupForm parse_group(std::string_view text);

/// Rank of g determined by the label and the orbit diagram.
int rank_of(Label star, const YoungDiagram& d);

}  // namespace unip
