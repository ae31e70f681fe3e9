#pragma once

// H(V, K, beta): the group on V x K* with
//   (v, t) * (v', t') = (v + v', t + t' + beta(v, v')).

#include <cstddef>
#include <cstdint>

#include "prdim/forms.hpp"
#include "prdim/groups.hpp"

namespace prdim {

class HeisenbergSpec {
 public:
  // Uses default_beta(forms).
  explicit HeisenbergSpec(FormSpace forms);
  // beta must be built against the same form space.
  HeisenbergSpec(FormSpace forms, BilinearMap beta);

  const FormSpace& forms() const { return forms_; }
  const BilinearMap& beta() const { return beta_; }
  std::uint32_t p() const { return forms_.p(); }
  std::size_t dim_v() const { return forms_.dim_v(); }
  std::size_t dim_k() const { return forms_.dim_k(); }
  std::uint64_t order() const;

 private:
  FormSpace forms_;
  BilinearMap beta_;
};

struct HeisenbergElement {
  FpVector v;
  FpVector t;  // coordinates in the basis of K* dual to the generators
  friend bool operator==(const HeisenbergElement&, const HeisenbergElement&) = default;
};

// Element index is the base-p number with digits v_1..v_d, t_1..t_k (v_1
// most significant). Index 0 is the identity.
Index encode(const HeisenbergSpec& spec, const HeisenbergElement& x);
HeisenbergElement decode(const HeisenbergSpec& spec, Index index);

GroupTable build_heisenberg(const HeisenbergSpec& spec, std::uint64_t seed = 0,
                            std::size_t order_cap = kDefaultOrderCap);

// Z(G) = [G,G] and G/[G,G] elementary abelian. Throws DomainError for
// abelian or non-p-group input.
bool verify_special(const GroupTable& G);

}  // namespace prdim
