#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ccodes/errors.hpp"

namespace ccodes {

// A vertex of the hypercube I(d), d <= 64, stored as a coordinate bitmask.
// Bit (i-1) of `bits` is coordinate i.
struct Vertex {
  std::uint64_t bits = 0;
  int dimension = 0;

  friend bool operator==(const Vertex&, const Vertex&) = default;
};

class Segment;

// A cyclic sequence T = (t_1, ..., t_N) of coordinate labels in [1, d].
// Read as a closed walk in I(d): x_1 = 0 and x_{i+1} = x_i with coordinate
// t_i flipped.  The walk is a circuit iff it returns to x_1 and visits N
// distinct vertices.
class TransitionSequence {
public:
  TransitionSequence() = default;

  // Throws parse_error if dimension is outside [0, 64] or any label is
  // outside [1, dimension].
  TransitionSequence(std::vector<int> labels, int dimension);

  int length() const { return static_cast<int>(labels_.size()); }
  int dimension() const { return dimension_; }
  const std::vector<int>& labels() const { return labels_; }

  // 1-based access, cyclic: label(N + 1) == label(1).  Requires N >= 1.
  int label(int i) const;

  // Number of distinct labels that actually occur.
  int used_dimension() const;

  // The two arcs between vertices x_i and x_j (1 <= i <= j <= N + 1):
  // the segment (t_i, ..., t_{j-1}) of length j - i.  Its complement() is
  // the rest of the cycle.
  Segment segment_between(int i, int j) const;
  Segment segment(int start, int length) const;  // 1-based start

  friend bool operator==(const TransitionSequence&, const TransitionSequence&) = default;

private:
  std::vector<int> labels_;
  int dimension_ = 0;
};

// A contiguous window of a transition sequence, cyclic at the end.
// Holds a pointer into its parent; the parent must outlive the segment.
class Segment {
public:
  Segment(const TransitionSequence& parent, int start, int length);

  int start() const { return start_; }
  int length() const { return length_; }
  int label(int i) const;  // 1-based within the segment

  // Number of labels occurring an odd number of times.  Equals the cube
  // distance between the segment's endpoint vertices.
  int delta() const;

  // The complementary window: together they partition the cycle.
  Segment complement() const;

  std::vector<int> to_labels() const;

private:
  const TransitionSequence* parent_;
  int start_;   // 0-based offset into the parent
  int length_;
};

int delta(const Segment& s);

// The vertex track x_1, ..., x_N of the closed walk (x_1 = 0).  Applying
// t_N to x_N leads back to x_1 iff every label occurs an even number of
// times.
std::vector<Vertex> vertices_of(const TransitionSequence& t);

// Same track as raw bitmasks; cheaper when only XOR distances are needed.
std::vector<std::uint64_t> vertex_masks(const TransitionSequence& t);

// True iff N >= 4, every label occurs an even number of times, and the N
// vertices are pairwise distinct.
bool is_circuit(const TransitionSequence& t);

// Relabels so that labels first occur in increasing order 1, 2, 3, ...
// Returns the relabeled sequence and the number of distinct labels.
std::pair<TransitionSequence, int> normalize(const TransitionSequence& t);

}  // namespace ccodes
