#ifndef COEVOLVE_REFERENCE_INTENSITY_HPP
#define COEVOLVE_REFERENCE_INTENSITY_HPP

#include <cstdint>
#include <unordered_map>

#include "coevolve/network.hpp"
#include "coevolve/params.hpp"

namespace coevolve {

// Direct evaluation of the model intensities by summing kernels over the
// raw event list. O(n) per query and shares nothing with the incremental
// replay, so it serves as the reference for it.
class ReferenceIntensity {
 public:
  enum class Limit {
    Left,   // history strictly before t
    Right,  // history up to and including t
  };

  ReferenceIntensity(NetworkState initial, ModelParams params);

  std::size_t nodes() const { return initial_.nodes(); }
  const ModelParams& params() const { return params_; }
  const EventLog& events() const { return events_; }

  // Appends an event (times must be nondecreasing).
  void record(const Event& event);

  Rate retweet(NodeId u, NodeId s, Time t, Limit limit = Limit::Left) const;
  Rate link(NodeId u, NodeId s, Time t, Limit limit = Limit::Left) const;

 private:
  bool in_history(std::size_t index, Time t, Limit limit) const;
  // Whether u already followed v when event `index` fired.
  bool followed_before(NodeId u, NodeId v, std::size_t index) const;
  bool linked_by(NodeId u, NodeId s, Time t, Limit limit) const;

  NetworkState initial_;
  ModelParams params_;
  EventLog events_;
  // Pair -> index of its link event.
  std::unordered_map<std::uint64_t, std::size_t> link_index_;
};

}  // namespace coevolve

#endif  // COEVOLVE_REFERENCE_INTENSITY_HPP
