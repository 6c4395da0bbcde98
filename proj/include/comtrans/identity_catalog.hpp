#pragma once

// Named identities of the commutator, translator and weakly anticommutative
// operations, as parsed polynomials.

#include "comtrans/ternary_terms.hpp"

namespace comtrans {

// Weight 1, variables x, y, z.
MultilinearPoly relation_alternating();  // [x,y,z] + [y,x,z]
MultilinearPoly relation_jacobi();       // <x,y,z> + <y,z,x> + <z,x,y>
MultilinearPoly relation_comtrans();     // [x,y,z] + [z,y,x] - <x,y,z> - <z,y,x>

// Weight 2, variables v, w, x, y, z.
MultilinearPoly identity_commutator5();  // T_{x,z}(v,w,y) + T_{x,z}(w,y,v) + T_{x,z}(y,v,w)
MultilinearPoly identity_translator5();   // R_{y,z} acts as a derivation of <-,-,->
MultilinearPoly identity_mixed5a();
MultilinearPoly identity_mixed5b();
MultilinearPoly identity_mixed5c();

// Weakly anticommutative operation {x,y,z} = xyz + xzy - 2zyx.
MultilinearPoly wac_symmetric_sum();
// T_yz({v,w,x}) = {T_yz(v),w,x} + {v,T_yz(w),x} + {v,w,T_yz(x)} with
// T_yz(u) = {u,y,z} + {u,z,y}.
MultilinearPoly wac_derivation_identity();
// The same identity with the middle term written as {v,T_yz(w),x} twice.
// It is not an identity; kept so the difference can be demonstrated.
MultilinearPoly wac_derivation_identity_misprint();

}  // namespace comtrans
