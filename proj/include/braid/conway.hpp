#pragma once

#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "braid/geodesy.hpp"
#include "braid/word.hpp"

namespace braid {

using BigInt = boost::multiprecision::cpp_int;

// Endpoint numbering of a braid diagram read as an ordered tangle. Columns
// are 1..n left to right; tops carry the odd labels, bottoms the even ones,
// jointly exhausting {1..2n}.
struct Ordering {
  int strands = 1;
  std::vector<int> top;     // label per column
  std::vector<int> bottom;  // label per column

  bool valid() const;
  friend bool operator==(const Ordering&, const Ordering&) = default;
};

// The natural numbering x_k -> k: labels run right to left, so the rightmost
// column gets (1, 2), the next (3, 4), and so on.
Ordering standard_ordering(int n);

struct OrderedDiagram {
  BraidWord word;
  Ordering ordering;
};

// Coefficients a_0..a_deg with trailing zeros trimmed; the zero polynomial
// has an empty vector and degree() == -1.
struct ConwayPolynomial {
  std::vector<BigInt> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  std::string text() const;  // "a0 + a1*z + ..."
  friend bool operator==(const ConwayPolynomial&, const ConwayPolynomial&) = default;
};

// State-sum Alexander-Conway polynomial of the ordered diagram. a_m adds
// sign(S) over coherent descending m-states S. Conventions, pinned by the
// test suite rather than assumed:
//  * smoothing joins each incoming strand to the outgoing strand on its
//    own side, so smoothed crossings do not permute columns;
//  * a state is coherent when every string's bottom label equals its top
//    label + 1;
//  * traversal order is by increasing top label, and a state is descending
//    when each smoothed crossing is first entered on its former overpass:
//    the right column for a positive crossing, the left for a negative one.
ConwayPolynomial conway(const OrderedDiagram& d, int budget = 20,
                        int threads = 1);

// True when the unique full state is coherent and descending.
bool is_homogeneous_ordering(const OrderedDiagram& d);

// An ordering whose full state is coherent and descending, when one exists;
// exists iff no column of the diagram carries both crossing signs.
std::optional<Ordering> find_homogeneous_ordering(const BraidWord& w);

struct HomogeneityCertificate {
  Ordering ordering;           // witness homogeneous ordering
  SignPattern pattern;         // maximal sign pattern of the word
  bool degree_equals_length;   // top coefficient check a_|D| != 0
};

struct CertifyResult {
  std::optional<HomogeneityCertificate> certificate;  // present iff certified
  std::string refusal;                                // reason otherwise

  bool certified() const { return certificate.has_value(); }
};

// Theorem-backed minimality certificate: a homogeneous word is geodesic, and
// the certificate carries the checked evidence. Refuses non-homogeneous
// words (they may still be geodesic; this is only a homogeneity certificate).
CertifyResult certify_minimal_homogeneous(const BraidWord& w);

// Checks, for a braid with some homogeneous representative, that w is
// geodesic iff w is homogeneous, that every geodesic representative is
// homogeneous, and that their sign patterns agree on used columns.
bool homogeneous_geodesic_converse(const BraidWord& w, const BallTable& t);

}  // namespace braid
