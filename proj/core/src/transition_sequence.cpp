#include "ccodes/transition_sequence.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace ccodes {

namespace {

std::uint64_t label_bit(int label) { return std::uint64_t{1} << (label - 1); }

}  // namespace

TransitionSequence::TransitionSequence(std::vector<int> labels, int dimension)
    : labels_(std::move(labels)), dimension_(dimension) {
  if (dimension_ < 0 || dimension_ > 64) {
    throw parse_error("dimension " + std::to_string(dimension_) + " outside [0, 64]");
  }
  for (int lab : labels_) {
    if (lab < 1 || lab > dimension_) {
      throw parse_error("label " + std::to_string(lab) + " outside [1, " +
                        std::to_string(dimension_) + "]");
    }
  }
}

int TransitionSequence::label(int i) const {
  if (labels_.empty()) throw precondition_error("label() on empty sequence");
  int n = length();
  int idx = (i - 1) % n;
  if (idx < 0) idx += n;
  return labels_[idx];
}

int TransitionSequence::used_dimension() const {
  std::uint64_t seen = 0;
  for (int lab : labels_) seen |= label_bit(lab);
  return std::popcount(seen);
}

Segment TransitionSequence::segment_between(int i, int j) const {
  int n = length();
  if (i < 1 || j < i || j > n + 1) {
    throw precondition_error("segment_between(" + std::to_string(i) + ", " +
                             std::to_string(j) + ") outside 1 <= i <= j <= N+1");
  }
  return Segment(*this, i - 1, j - i);
}

Segment TransitionSequence::segment(int start, int length) const {
  int n = this->length();
  if (start < 1 || start > std::max(n, 1) || length < 0 || length > n) {
    throw precondition_error("segment(" + std::to_string(start) + ", " +
                             std::to_string(length) + ") out of range");
  }
  return Segment(*this, start - 1, length);
}

Segment::Segment(const TransitionSequence& parent, int start, int length)
    : parent_(&parent), start_(start), length_(length) {}

int Segment::label(int i) const {
  if (i < 1 || i > length_) throw precondition_error("segment label index out of range");
  return parent_->label(start_ + i);
}

int Segment::delta() const {
  std::uint64_t parity = 0;
  for (int i = 0; i < length_; ++i) {
    parity ^= label_bit(parent_->label(start_ + 1 + i));
  }
  return std::popcount(parity);
}

Segment Segment::complement() const {
  int n = parent_->length();
  if (n == 0) return Segment(*parent_, 0, 0);
  return Segment(*parent_, (start_ + length_) % n, n - length_);
}

std::vector<int> Segment::to_labels() const {
  std::vector<int> out;
  out.reserve(length_);
  for (int i = 1; i <= length_; ++i) out.push_back(label(i));
  return out;
}

int delta(const Segment& s) { return s.delta(); }

std::vector<std::uint64_t> vertex_masks(const TransitionSequence& t) {
  std::vector<std::uint64_t> verts(t.length());
  std::uint64_t cur = 0;
  for (int i = 0; i < t.length(); ++i) {
    verts[i] = cur;
    cur ^= label_bit(t.labels()[i]);
  }
  return verts;
}

std::vector<Vertex> vertices_of(const TransitionSequence& t) {
  std::vector<Vertex> out;
  out.reserve(t.length());
  for (std::uint64_t m : vertex_masks(t)) out.push_back(Vertex{m, t.dimension()});
  return out;
}

bool is_circuit(const TransitionSequence& t) {
  int n = t.length();
  if (n < 4) return false;
  std::uint64_t parity = 0;
  for (int lab : t.labels()) parity ^= label_bit(lab);
  if (parity != 0) return false;  // walk does not close
  auto verts = vertex_masks(t);
  std::sort(verts.begin(), verts.end());
  return std::adjacent_find(verts.begin(), verts.end()) == verts.end();
}

std::pair<TransitionSequence, int> normalize(const TransitionSequence& t) {
  std::vector<int> map(t.dimension() + 1, 0);
  std::vector<int> out;
  out.reserve(t.length());
  int next = 0;
  for (int lab : t.labels()) {
    if (map[lab] == 0) map[lab] = ++next;
    out.push_back(map[lab]);
  }
  return {TransitionSequence(std::move(out), next), next};
}

}  // namespace ccodes
