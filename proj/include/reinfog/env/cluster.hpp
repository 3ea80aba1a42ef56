#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "reinfog/core/model.hpp"

namespace reinfog::env {

/// Node index, or kUser for the IoT device where applications originate.
using Endpoint = int;
inline constexpr Endpoint kUser = -1;

struct Link {
    double latency_s = 0.0;
    double bandwidth_mbps = 1.0;  ///< megabytes per second
};

struct LinkEntry {
    Endpoint src = kUser;
    Endpoint dst = kUser;
    Link link;
};

class ClusterSpec {
public:
    /// Links address endpoints by node index. Every ordered pair of distinct
    /// nodes and every user<->node pair must be present; throws otherwise.
    ClusterSpec(std::vector<Node> nodes, const std::vector<LinkEntry>& links);

    /// Same link between every pair of nodes, and `user_link` to/from the user.
    static ClusterSpec fully_connected(std::vector<Node> nodes, Link node_link, Link user_link);

    const std::vector<Node>& nodes() const noexcept { return nodes_; }
    std::size_t node_count() const noexcept { return nodes_.size(); }
    const Node& node(std::size_t index) const { return nodes_.at(index); }

    const Link& link(Endpoint src, Endpoint dst) const;

    /// latency + size / bandwidth; zero when co-located.
    double transfer_time(Endpoint src, Endpoint dst, double size_mb) const;

    double max_compute_cap() const noexcept { return max_compute_; }
    double max_mem_avail() const noexcept { return max_mem_; }
    std::size_t fastest_node() const noexcept { return fastest_; }

    std::vector<LinkEntry> links() const;

private:
    std::vector<Node> nodes_;
    std::map<std::pair<Endpoint, Endpoint>, Link> links_;
    double max_compute_ = 0.0;
    double max_mem_ = 0.0;
    std::size_t fastest_ = 0;
};

/// Three-node fog setup used by the command line defaults: a fast but
/// power-hungry cloud VM far from the user, an efficient edge server, and a
/// small gateway next to the user with little memory.
ClusterSpec reference_cluster();

}  // namespace reinfog::env
