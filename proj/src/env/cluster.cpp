#include "reinfog/env/cluster.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace reinfog::env {

ClusterSpec::ClusterSpec(std::vector<Node> nodes, const std::vector<LinkEntry>& links) : nodes_(std::move(nodes)) {
    if (nodes_.empty()) throw std::invalid_argument("cluster needs at least one node");
    const auto n = static_cast<Endpoint>(nodes_.size());
    for (const auto& e : links) {
        if (e.src < kUser || e.src >= n || e.dst < kUser || e.dst >= n)
            throw std::invalid_argument("link endpoint out of range");
        if (!(e.link.latency_s >= 0.0) || !std::isfinite(e.link.latency_s))
            throw std::invalid_argument("link latency must be >= 0");
        if (!(e.link.bandwidth_mbps > 0.0)) throw std::invalid_argument("link bandwidth must be > 0");
        links_[{e.src, e.dst}] = e.link;
    }
    for (Endpoint a = kUser; a < n; ++a)
        for (Endpoint b = kUser; b < n; ++b) {
            if (a == b || (a == kUser && b == kUser)) continue;
            if (!links_.count({a, b}))
                throw std::invalid_argument("link table misses the pair " + std::to_string(a) + " -> " +
                                            std::to_string(b));
        }
    for (std::size_t j = 0; j < nodes_.size(); ++j) {
        if (nodes_[j].compute_cap > max_compute_) {
            max_compute_ = nodes_[j].compute_cap;
            fastest_ = j;
        }
        max_mem_ = std::max(max_mem_, nodes_[j].mem_avail);
    }
}

ClusterSpec ClusterSpec::fully_connected(std::vector<Node> nodes, Link node_link, Link user_link) {
    std::vector<LinkEntry> links;
    const auto n = static_cast<Endpoint>(nodes.size());
    for (Endpoint a = kUser; a < n; ++a)
        for (Endpoint b = kUser; b < n; ++b) {
            if (a == b) continue;
            links.push_back({a, b, (a == kUser || b == kUser) ? user_link : node_link});
        }
    return ClusterSpec(std::move(nodes), links);
}

const Link& ClusterSpec::link(Endpoint src, Endpoint dst) const {
    auto it = links_.find({src, dst});
    if (it == links_.end())
        throw std::out_of_range("no link " + std::to_string(src) + " -> " + std::to_string(dst));
    return it->second;
}

double ClusterSpec::transfer_time(Endpoint src, Endpoint dst, double size_mb) const {
    if (src == dst) return 0.0;
    const Link& l = link(src, dst);
    return l.latency_s + size_mb / l.bandwidth_mbps;
}

std::vector<LinkEntry> ClusterSpec::links() const {
    std::vector<LinkEntry> out;
    for (const auto& [key, l] : links_) out.push_back({key.first, key.second, l});
    return out;
}

ClusterSpec reference_cluster() {
    std::vector<Node> nodes{Node(0, 2000.0, 4096.0, 20.0), Node(1, 1000.0, 2048.0, 4.0), Node(2, 250.0, 12.0, 2.0)};
    const Link cloud_user{0.10, 10.0};
    const Link edge_user{0.01, 50.0};
    const Link gateway_user{0.005, 20.0};
    const Link backbone{0.05, 20.0};
    const Link local{0.01, 50.0};
    std::vector<LinkEntry> links{
        {kUser, 0, cloud_user}, {0, kUser, cloud_user}, {kUser, 1, edge_user}, {1, kUser, edge_user},
        {kUser, 2, gateway_user}, {2, kUser, gateway_user}, {0, 1, backbone}, {1, 0, backbone},
        {0, 2, backbone}, {2, 0, backbone}, {1, 2, local}, {2, 1, local},
    };
    return ClusterSpec(std::move(nodes), links);
}

}  // namespace reinfog::env
