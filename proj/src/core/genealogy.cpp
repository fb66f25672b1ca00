#include "core/genealogy.hpp"

#include <algorithm>
#include <sstream>

#include "core/error.hpp"
#include "core/textio.hpp"

namespace ideasim {

namespace {

std::string opt_field(const std::optional<std::uint64_t>& v) {
    return v ? std::to_string(*v) : std::string();
}

std::optional<std::uint64_t> parse_opt(const std::string& text, const std::string& what) {
    if (text.empty()) return std::nullopt;
    return parse_u64(text, what);
}

}  // namespace

std::string export_log(const EventLog& log, const std::string& preamble) {
    std::ostringstream out;
    std::istringstream pre(preamble);
    std::string line;
    while (std::getline(pre, line)) out << "# " << line << "\n";

    out << "# initial=";
    for (std::size_t i = 0; i < log.initial.size(); ++i) {
        if (i) out << "|";
        out << log.initial[i].id << ":" << log.initial[i].idea.bits;
    }
    out << "\n" << kEventLogHeader << "\n";

    for (const auto& ev : log.events) {
        out << ev.step << "," << ev.iteration << "," << ev.agent << ","
            << operator_name(ev.op) << ",";
        for (std::size_t i = 0; i < ev.parents.size(); ++i) {
            if (i) out << "|";
            out << ev.parents[i];
        }
        out << "," << opt_field(ev.child) << "," << opt_field(ev.removed) << ","
            << (ev.skipped ? 1 : 0) << "," << opt_field(ev.child_encoding) << "\n";
    }
    return out.str();
}

EventLog parse_log(const std::string& text) {
    EventLog log;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    bool header_seen = false;

    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const std::string at = "log line " + std::to_string(line_no);

        if (line[0] == '#') {
            const auto start = line.find_first_not_of("# ");
            if (start == std::string::npos) continue;
            const std::string body = line.substr(start);
            if (body.rfind("initial=", 0) == 0) {
                const std::string packed = body.substr(8);
                if (packed.empty()) continue;
                for (const auto& item : split(packed, '|')) {
                    const auto colon = item.find(':');
                    if (colon == std::string::npos)
                        throw ParseError(at + ": expected 'id:encoding' in initial list");
                    log.initial.push_back(
                        {parse_u64(item.substr(0, colon), at + " initial id"),
                         Idea{parse_u64(item.substr(colon + 1), at + " initial encoding")}});
                }
            }
            continue;
        }

        if (!header_seen) {
            if (line != kEventLogHeader)
                throw ParseError(at + ": expected header '" + kEventLogHeader + "'");
            header_seen = true;
            continue;
        }

        const auto fields = split(line, ',');
        if (fields.size() != 9)
            throw ParseError(at + ": expected 9 fields, got " + std::to_string(fields.size()));

        EvolutionaryEvent ev;
        ev.step = parse_u64(fields[0], at + " step");
        ev.iteration = static_cast<int>(parse_u64(fields[1], at + " iteration"));
        ev.agent = static_cast<int>(parse_u64(fields[2], at + " agent"));
        const auto kind = operator_from_name(fields[3]);
        if (!kind) throw ParseError(at + ": unknown operator '" + fields[3] + "'");
        ev.op = *kind;
        if (!fields[4].empty()) {
            for (const auto& p : split(fields[4], '|'))
                ev.parents.push_back(parse_u64(p, at + " parent"));
        }
        ev.child = parse_opt(fields[5], at + " child");
        ev.removed = parse_opt(fields[6], at + " removed");
        const auto skipped = parse_u64(fields[7], at + " skipped");
        if (skipped > 1) throw ParseError(at + ": skipped must be 0 or 1");
        ev.skipped = skipped == 1;
        ev.child_encoding = parse_opt(fields[8], at + " child_encoding");
        log.events.push_back(std::move(ev));
    }

    if (!header_seen) throw ParseError("log line " + std::to_string(line_no) + ": missing header");
    return log;
}

EventLog load_log_file(const std::string& path) {
    return parse_log(read_text_file(path));
}

GenealogyDag GenealogyDag::build(const EventLog& log) {
    GenealogyDag dag;
    auto add_node = [&dag](std::uint64_t id, std::uint64_t encoding, std::uint64_t birth) {
        if (dag.index_.count(id))
            throw ParseError("malformed log: instance " + std::to_string(id) + " created twice");
        dag.index_.emplace(id, dag.nodes_.size());
        GenealogyNode node;
        node.id = id;
        node.encoding = encoding;
        node.birth_step = birth;
        dag.nodes_.push_back(std::move(node));
    };

    for (const auto& inst : log.initial) add_node(inst.id, inst.idea.bits, 0);

    for (const auto& ev : log.events) {
        if (ev.skipped) continue;
        if (ev.child) {
            if (!ev.child_encoding)
                throw ParseError("malformed log: step " + std::to_string(ev.step) +
                                 " creates a child without an encoding");
            add_node(*ev.child, *ev.child_encoding, ev.step);
            for (const std::uint64_t parent : ev.parents) {
                const auto it = dag.index_.find(parent);
                if (it == dag.index_.end())
                    throw ParseError("malformed log: step " + std::to_string(ev.step) +
                                     " references unknown parent " + std::to_string(parent));
                dag.nodes_[it->second].children.push_back(*ev.child);
                ++dag.nodes_.back().in_degree;
                ++dag.edges_;
            }
        }
        if (ev.removed) {
            const auto it = dag.index_.find(*ev.removed);
            if (it == dag.index_.end())
                throw ParseError("malformed log: step " + std::to_string(ev.step) +
                                 " removes unknown instance " + std::to_string(*ev.removed));
            dag.nodes_[it->second].death_step = ev.step;
        }
    }
    return dag;
}

const GenealogyNode& GenealogyDag::node(std::uint64_t id) const {
    const auto it = index_.find(id);
    if (it == index_.end())
        throw ConfigError("unknown instance id " + std::to_string(id));
    return nodes_[it->second];
}

std::string GenealogyDag::to_dot() const {
    std::ostringstream out;
    out << "digraph genealogy {\n";
    for (const auto& node : nodes_)
        out << "  n" << node.id << " [label=\"" << node.id << ":" << node.encoding << "\"];\n";
    for (const auto& node : nodes_) {
        for (const std::uint64_t child : node.children)
            out << "  n" << node.id << " -> n" << child << ";\n";
    }
    out << "}\n";
    return out.str();
}

GenealogyStats genealogy_stats(const GenealogyDag& dag) {
    GenealogyStats stats;
    stats.nodes = dag.nodes().size();
    stats.edges = dag.edge_count();

    std::size_t non_leaf = 0;
    std::size_t branching = 0;
    for (const auto& node : dag.nodes()) {
        if (node.in_degree == 0) ++stats.roots;
        if (!node.children.empty()) {
            ++non_leaf;
            if (node.children.size() >= 2) ++branching;
        }
    }
    stats.branching_ratio =
        non_leaf == 0 ? 0.0 : static_cast<double>(branching) / static_cast<double>(non_leaf);

    // Nodes are stored in creation order, so edges only point forward and a
    // single sweep computes longest-path depths.
    std::unordered_map<std::uint64_t, std::size_t> depth;
    for (const auto& node : dag.nodes()) {
        const std::size_t base = depth[node.id];
        if (base > stats.max_depth) stats.max_depth = base;
        for (const std::uint64_t child : node.children) {
            auto& d = depth[child];
            if (base + 1 > d) d = base + 1;
        }
    }
    return stats;
}

std::string format_stats(const GenealogyStats& stats) {
    std::ostringstream out;
    out << "nodes=" << stats.nodes << "\n"
        << "edges=" << stats.edges << "\n"
        << "roots=" << stats.roots << "\n"
        << "max_depth=" << stats.max_depth << "\n"
        << "branching_ratio=" << format_g17(stats.branching_ratio) << "\n";
    return out.str();
}

}  // namespace ideasim
