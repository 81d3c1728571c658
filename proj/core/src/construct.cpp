#include "ccodes/construct.hpp"

#include <iterator>
#include <string>

#include "ccodes/subcircuit.hpp"

namespace ccodes {

namespace {

// Half of the published (16,9) code of length 44; the full sequence is this
// twice.  Equals the (k=9, l=4) instance of the symmetric family.
constexpr int kExample1Half[] = {1, 2, 3,  4, 5,  6,  7, 8,  9,  10, 11,
                                 12, 13, 2, 4, 6, 14, 8, 15, 10, 16, 12};

// Half of a second (16,9) code of length 44, with phi 12 instead of 13.
constexpr int kExample1VariantHalf[] = {1,  11, 2,  12, 3, 13, 4,  14, 5,  16, 15,
                                        6,  11, 7,  12, 8, 13, 9,  14, 16, 10, 15};

TransitionSequence doubled(const int* half, int half_len, int dim) {
  std::vector<int> labels;
  labels.reserve(2 * half_len);
  for (int rep = 0; rep < 2; ++rep) {
    labels.insert(labels.end(), half, half + half_len);
  }
  return TransitionSequence(std::move(labels), dim);
}

}  // namespace

void FamilyParams::validate() const {
  if (k < 5 || k % 2 == 0) {
    throw precondition_error("family requires odd k >= 5, got k=" + std::to_string(k));
  }
  if (l < 2 || l % 2 != 0) {
    throw precondition_error("family requires even l >= 2, got l=" + std::to_string(l));
  }
  if (k < 2 * l + 1) {
    throw precondition_error("family requires k >= 2l+1, got k=" + std::to_string(k) +
                             " l=" + std::to_string(l));
  }
}

TransitionSequence construct_form(const FamilyParams& p) {
  p.validate();
  int k = p.k;
  int l = p.l;
  int d = p.dimension();

  std::vector<int> half;
  half.reserve(2 * k + l);
  // w1 = 1..k+l
  for (int i = 1; i <= k + l; ++i) half.push_back(i);
  // w2 = 2, 4, ..., 2l-2
  for (int i = 2; i <= 2 * l - 2; i += 2) half.push_back(i);
  // w3 interleaves g_j = k+l+j with b_j = 2l + 2(j-1)
  int m = d - (k + l);
  for (int j = 1; j <= m; ++j) {
    half.push_back(k + l + j);
    half.push_back(2 * l + 2 * (j - 1));
  }

  std::vector<int> labels = half;
  labels.insert(labels.end(), half.begin(), half.end());
  return TransitionSequence(std::move(labels), d);
}

TransitionSequence construct_form(int k, int l) { return construct_form(FamilyParams{k, l}); }

TransitionSequence builtin_code(Builtin name) {
  switch (name) {
    case Builtin::example1:
      return doubled(kExample1Half, static_cast<int>(std::size(kExample1Half)), 16);
    case Builtin::example1_variant:
      return doubled(kExample1VariantHalf, static_cast<int>(std::size(kExample1VariantHalf)), 16);
  }
  throw precondition_error("unknown builtin code");
}

TransitionSequence builtin_code(std::string_view name) {
  if (name == "example1") return builtin_code(Builtin::example1);
  if (name == "example1-variant") return builtin_code(Builtin::example1_variant);
  throw precondition_error("unknown builtin code '" + std::string(name) +
                           "' (known: example1, example1-variant)");
}

TransitionSequence projected_family(int k, int l) {
  if (k < 4 || k % 2 != 0) {
    throw precondition_error("projected family requires even k >= 4, got k=" + std::to_string(k));
  }
  if (l < 3 || l % 2 == 0) {
    throw precondition_error("projected family requires odd l >= 3, got l=" + std::to_string(l));
  }
  if (k < 2 * l - 2) {
    throw precondition_error("projected family requires k >= 2l-2, got k=" + std::to_string(k) +
                             " l=" + std::to_string(l));
  }
  TransitionSequence source = construct_form(k + 1, l - 1);
  // The top label is the last gamma; it occurs once per half, so deleting it
  // shortens the code by 2 and the remaining labels are already dense.
  return deimer_project(source, source.dimension()).result;
}

}  // namespace ccodes
