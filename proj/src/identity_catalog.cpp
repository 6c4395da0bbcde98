#include "comtrans/identity_catalog.hpp"

namespace comtrans {

namespace {

const OpList kCT = {OpId::Commutator, OpId::Translator};
const OpList kW = {OpId::Wac};

}  // namespace

MultilinearPoly relation_alternating() { return parse_poly("[x,y,z] + [y,x,z]", kCT); }

MultilinearPoly relation_jacobi() { return parse_poly("<x,y,z> + <y,z,x> + <z,x,y>", kCT); }

MultilinearPoly relation_comtrans() { return parse_poly("[x,y,z] + [z,y,x] - <x,y,z> - <z,y,x>", kCT); }

MultilinearPoly identity_commutator5() {
  return parse_poly(
      "[[v,w,x],y,z] - [v,w,[x,y,z]] + [[w,y,x],v,z] - [w,y,[x,v,z]] + [[y,v,x],w,z] - [y,v,[x,w,z]]", kCT);
}

MultilinearPoly identity_translator5() {
  return parse_poly("<<v,w,x>,y,z> - <<v,y,z>,w,x> - <v,<w,y,z>,x> - <v,w,<x,y,z>>", kCT);
}

MultilinearPoly identity_mixed5a() {
  return parse_poly("[[v,w,x],y,z] + [[x,v,y],w,z] - [<v,w,x>,y,z] + [<v,y,w>,x,z] - [<x,y,w>,v,z]", kCT);
}

MultilinearPoly identity_mixed5b() {
  return parse_poly("[[v,w,x],y,z] - [[v,y,w],x,z] + <[w,v,z],x,y> + [<v,y,w>,x,z] + [v,w,<z,x,y>]", kCT);
}

MultilinearPoly identity_mixed5c() {
  return parse_poly(
      "[[v,w,x],y,z] + [[v,w,z],x,y] - [[x,w,y],v,z] - [[z,w,y],x,v] + <[w,v,z],x,y> + <[x,w,z],y,v>"
      " + <[z,w,y],x,v> + [<w,v,x>,y,z] + [<w,v,z>,x,y] - [<w,y,v>,x,z] - <<w,v,z>,x,y> + <<w,y,v>,x,z>"
      " + <w,x,<z,y,v>>",
      kCT);
}

MultilinearPoly wac_symmetric_sum() {
  return parse_poly("{x,y,z} + {x,z,y} + {y,x,z} + {y,z,x} + {z,x,y} + {z,y,x}", kW);
}

MultilinearPoly wac_derivation_identity() {
  return parse_poly(
      "{{v,w,x},y,z} + {{v,w,x},z,y} - {{v,y,z},w,x} - {{v,z,y},w,x} - {v,{w,y,z},x} - {v,{w,z,y},x}"
      " - {v,w,{x,y,z}} - {v,w,{x,z,y}}",
      kW);
}

MultilinearPoly wac_derivation_identity_misprint() {
  return parse_poly(
      "{{v,w,x},y,z} + {{v,w,x},z,y} - 2{v,{w,y,z},x} - 2{v,{w,z,y},x} - {v,w,{x,y,z}} - {v,w,{x,z,y}}", kW);
}

}  // namespace comtrans
