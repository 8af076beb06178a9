#ifndef NAGAOLAB_IO_HPP_
#define NAGAOLAB_IO_HPP_

#include <string>
#include <vector>

#include <json.hpp>

#include "amalgam.hpp"
#include "homology.hpp"
#include "witnesses.hpp"

namespace nagaolab {

  using json = nlohmann::ordered_json;

  // {"coeffs": ["1", "0", "-2"], "mod": 3}; "mod" is omitted over Z.
  json to_json(Poly const& f);

  // Accepts the object form, a bare coefficient array (strings or integers)
  // or polynomial text. A "mod" that disagrees with ring throws RingMismatch;
  // without one the coefficients are read into ring.
  Poly poly_from_json(json const& j, Ring ring);

  json to_json(Mat2 const& m);

  // 2x2 array of polynomials, or matrix text / generator shorthand.
  Mat2 mat_from_json(json const& j, Ring ring);

  json to_json(Word const& w);

  // An array whose entries are {"factor": 1|2, "matrix": ...} or generator
  // shorthand strings (an E21 expands to three letters), or a normal form
  // object, read back as head followed by its tail.
  Word word_from_json(json const& j, Ring ring);

  json to_json(NormalForm const& x);

  json to_json(WedgeClass const& x);
  WedgeClass wedge_class_from_json(json const& j);

  json to_json(GradedDimTable const& t);

  // Header group,p,d,i,dim,flags; flags joined by ';'.
  std::string tables_to_csv(std::vector<GradedDimTable> const& tables);

  json to_json(LedgerReport const& r);

  json to_json(CheckReport const& r);

  json to_json(SnWitness const& w);

}  // namespace nagaolab

#endif  // NAGAOLAB_IO_HPP_
