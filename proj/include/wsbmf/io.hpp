// Copyright 2026 The wsbmf Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef WSBMF_IO_HPP
#define WSBMF_IO_HPP

#include <cctype>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "wsbmf/core.hpp"
#include "wsbmf/cover.hpp"
#include "wsbmf/graph.hpp"
#include "wsbmf/metrics.hpp"

namespace wsbmf {

namespace detail {

inline std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

inline std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> tokens;
    std::string tok;
    while (in >> tok) tokens.push_back(tok);
    return tokens;
}

inline std::vector<std::string> split_on(const std::string& s, char sep) {
    std::vector<std::string> fields;
    std::string field;
    for (char ch : s) {
        if (ch == sep) {
            fields.push_back(field);
            field.clear();
        } else {
            field.push_back(ch);
        }
    }
    fields.push_back(field);
    return fields;
}

// Shortest exact decimal representation of a double, stable across runs.
inline std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    double parsed = 0.0;
    for (int precision = 1; precision < 17; ++precision) {
        char probe[32];
        std::snprintf(probe, sizeof probe, "%.*g", precision, v);
        std::sscanf(probe, "%lf", &parsed);
        if (parsed == v) return probe;
    }
    return buf;
}

}  // namespace detail

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

inline void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write " + path);
    out << text;
    if (!out) throw InputError("write failed for " + path);
}

// Parses the bipartite edge-list format: one `delta_id gamma_id` pair of
// whitespace-separated string ids per line, `#` comments and blank lines
// skipped. Nodes are numbered in first-appearance order. Duplicate edges
// collapse with a warning; an id appearing in both columns is an error,
// as is an edgeless input.
inline BipartiteGraph parse_edgelist(const std::string& text,
                                     std::vector<std::string>* warnings = nullptr) {
    std::map<std::string, Index> delta_ids, gamma_ids;
    std::vector<std::string> delta_labels, gamma_labels;
    std::vector<BipartiteGraph::Edge> edges;
    std::map<BipartiteGraph::Edge, std::size_t> seen;

    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string body = detail::trim(line);
        if (body.empty() || body[0] == '#') continue;
        const std::vector<std::string> tokens = detail::split_ws(body);
        if (tokens.size() != 2)
            throw ParseError("expected two node ids, got " + std::to_string(tokens.size()), line_no);
        if (gamma_ids.count(tokens[0]))
            throw ParseError("id '" + tokens[0] + "' already used on the gamma side", line_no);
        if (delta_ids.count(tokens[1]))
            throw ParseError("id '" + tokens[1] + "' already used on the delta side", line_no);
        auto [dit, dnew] = delta_ids.emplace(tokens[0], static_cast<Index>(delta_ids.size()));
        if (dnew) delta_labels.push_back(tokens[0]);
        auto [git, gnew] = gamma_ids.emplace(tokens[1], static_cast<Index>(gamma_ids.size()));
        if (gnew) gamma_labels.push_back(tokens[1]);
        const BipartiteGraph::Edge edge{dit->second, git->second};
        auto [eit, fresh] = seen.emplace(edge, line_no);
        if (!fresh) {
            if (warnings)
                warnings->push_back("line " + std::to_string(line_no) + ": duplicate edge '" + tokens[0] +
                                    " " + tokens[1] + "' first seen on line " + std::to_string(eit->second));
            continue;
        }
        edges.push_back(edge);
    }
    if (edges.empty()) throw InputError("edge list is empty");
    const Index n_delta = static_cast<Index>(delta_labels.size());
    const Index n_gamma = static_cast<Index>(gamma_labels.size());
    return BipartiteGraph(n_delta, n_gamma, std::move(edges), std::move(delta_labels),
                          std::move(gamma_labels));
}

inline std::string write_edgelist(const BipartiteGraph& graph) {
    std::ostringstream out;
    out << "# bipartite edge list: delta_id gamma_id\n";
    for (const auto& [d, g] : graph.edges()) out << graph.delta_label(d) << ' ' << graph.gamma_label(g) << '\n';
    return out.str();
}

// A cover plus everything needed to serialize it: node labels, the part
// split, and optionally the continuous membership rows.
struct CoverTable {
    CommunityCover cover;
    Index n_delta = 0;
    std::vector<std::string> labels;  // empty means positional defaults
    Matrix continuous;                // 0 x 0 when absent

    std::string label(Index v) const {
        if (!labels.empty()) return labels[v];
        return v < n_delta ? "d" + std::to_string(v) : "g" + std::to_string(v - n_delta);
    }
};

inline CoverTable make_cover_table(const BipartiteGraph& graph, CommunityCover cover,
                                   Matrix continuous = Matrix()) {
    if (cover.n() != graph.n()) throw InputError("cover size does not match graph");
    CoverTable table{std::move(cover), graph.n_delta(), {}, std::move(continuous)};
    table.labels.reserve(graph.n());
    for (Index v = 0; v < graph.n(); ++v) table.labels.push_back(graph.label(v));
    return table;
}

// Tab-separated cover serialization. The directive line pins the community
// count and part split so parsing reconstructs the exact cover; per node:
// label, part, sorted community list (`-` when outlier), outlier flag,
// exponential entropy, and the continuous membership row when available.
inline std::string write_cover_tsv(const CoverTable& table) {
    const Index n = table.cover.n();
    const bool with_u = table.continuous.size() > 0;
    if (with_u && table.continuous.rows() != n) throw InputError("membership rows do not match cover");
    Vector entropy;
    if (with_u) entropy = exponential_entropy(table.continuous);
    std::ostringstream out;
    out << "# wsbmf-cover v1 c=" << table.cover.c() << " n_delta=" << table.n_delta
        << " n_gamma=" << (n - table.n_delta) << '\n';
    out << "# node\tpart\tcommunities\toutlier\tentropy\tmembership\n";
    for (Index v = 0; v < n; ++v) {
        out << table.label(v) << '\t' << (v < table.n_delta ? "delta" : "gamma") << '\t';
        const auto& comms = table.cover.communities_of(v);
        if (comms.empty()) {
            out << '-';
        } else {
            for (std::size_t i = 0; i < comms.size(); ++i) out << (i ? ";" : "") << comms[i];
        }
        out << '\t' << (comms.empty() ? 1 : 0);
        if (with_u) {
            out << '\t' << detail::format_double(entropy(v)) << '\t';
            for (Index k = 0; k < table.continuous.cols(); ++k)
                out << (k ? ";" : "") << detail::format_double(table.continuous(v, k));
        }
        out << '\n';
    }
    return out.str();
}

inline CoverTable parse_cover(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    Index c = -1, n_delta = -1, n_gamma = -1;
    std::vector<std::vector<Index>> assignments;
    std::vector<std::string> labels;
    std::vector<std::vector<double>> rows;
    Index seen_delta = 0;

    while (std::getline(in, line)) {
        ++line_no;
        const std::string body = detail::trim(line);
        if (body.empty()) continue;
        if (body[0] == '#') {
            std::istringstream dir(body.substr(1));
            std::string word;
            while (dir >> word) {
                if (word.rfind("c=", 0) == 0) c = std::stoll(word.substr(2));
                if (word.rfind("n_delta=", 0) == 0) n_delta = std::stoll(word.substr(8));
                if (word.rfind("n_gamma=", 0) == 0) n_gamma = std::stoll(word.substr(8));
            }
            continue;
        }
        if (c < 0) throw ParseError("missing '# wsbmf-cover v1 c=...' directive", line_no);
        const std::vector<std::string> fields = detail::split_on(body, '\t');
        if (fields.size() != 4 && fields.size() != 6)
            throw ParseError("expected 4 or 6 tab-separated fields, got " + std::to_string(fields.size()),
                             line_no);
        labels.push_back(fields[0]);
        if (fields[1] != "delta" && fields[1] != "gamma") throw ParseError("part must be delta or gamma", line_no);
        if (fields[1] == "delta") {
            if (seen_delta != static_cast<Index>(labels.size()) - 1)
                throw ParseError("delta rows must precede gamma rows", line_no);
            ++seen_delta;
        }
        std::vector<Index> comms;
        if (fields[2] != "-") {
            for (const std::string& tok : detail::split_on(fields[2], ';')) {
                try {
                    comms.push_back(std::stoll(tok));
                } catch (const std::exception&) {
                    throw ParseError("bad community index '" + tok + "'", line_no);
                }
            }
        }
        if ((fields[3] == "1") != comms.empty()) throw ParseError("outlier flag contradicts community list", line_no);
        assignments.push_back(std::move(comms));
        if (fields.size() == 6) {
            std::vector<double> row;
            for (const std::string& tok : detail::split_on(fields[5], ';')) {
                try {
                    row.push_back(std::stod(tok));
                } catch (const std::exception&) {
                    throw ParseError("bad membership value '" + tok + "'", line_no);
                }
            }
            rows.push_back(std::move(row));
        } else {
            rows.emplace_back();
        }
    }
    if (assignments.empty()) throw InputError("cover file has no rows");
    if (n_delta >= 0 && seen_delta != n_delta) throw InputError("cover directive n_delta does not match rows");
    if (n_gamma >= 0 && static_cast<Index>(assignments.size()) - seen_delta != n_gamma)
        throw InputError("cover directive n_gamma does not match rows");

    CoverTable table{CommunityCover(std::move(assignments), c), seen_delta, std::move(labels), Matrix()};
    const bool with_u = !rows.front().empty();
    for (const auto& row : rows)
        if (row.empty() == with_u) throw InputError("membership column must be present on all rows or none");
    if (with_u) {
        table.continuous.resize(static_cast<Index>(rows.size()), static_cast<Index>(rows.front().size()));
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != rows.front().size()) throw InputError("membership rows have mixed widths");
            for (std::size_t j = 0; j < rows[i].size(); ++j)
                table.continuous(static_cast<Index>(i), static_cast<Index>(j)) = rows[i][j];
        }
    }
    return table;
}

enum class Vote { Yea, Nay, Abstain };

struct VoteRecord {
    std::string voter;
    std::string bill;
    Vote vote = Vote::Abstain;
};

// CSV `voter,bill,vote` records; a `voter,bill,vote` header line and `#`
// comments are skipped. Identical duplicates collapse with a warning;
// contradictory duplicates are an error.
inline std::vector<VoteRecord> parse_votes(const std::string& text,
                                           std::vector<std::string>* warnings = nullptr) {
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    std::vector<VoteRecord> records;
    std::map<std::pair<std::string, std::string>, Vote> seen;
    while (std::getline(in, line)) {
        ++line_no;
        std::string body = detail::trim(line);
        if (body.empty() || body[0] == '#') continue;
        std::vector<std::string> fields = detail::split_on(body, ',');
        if (fields.size() != 3) throw ParseError("expected voter,bill,vote", line_no);
        for (std::string& f : fields) f = detail::trim(f);
        std::string verb = fields[2];
        for (char& ch : verb) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
        if (seen.empty() && verb == "vote") continue;  // header row
        Vote vote;
        if (verb == "yea")
            vote = Vote::Yea;
        else if (verb == "nay")
            vote = Vote::Nay;
        else if (verb == "abstain")
            vote = Vote::Abstain;
        else
            throw ParseError("vote must be yea, nay, or abstain; got '" + fields[2] + "'", line_no);
        auto [it, fresh] = seen.emplace(std::make_pair(fields[0], fields[1]), vote);
        if (!fresh) {
            if (it->second != vote)
                throw ParseError("conflicting votes for (" + fields[0] + ", " + fields[1] + ")", line_no);
            if (warnings) warnings->push_back("line " + std::to_string(line_no) + ": duplicate record dropped");
            continue;
        }
        records.push_back({fields[0], fields[1], vote});
    }
    if (records.empty()) throw InputError("no vote records");
    return records;
}

struct VoteNetwork {
    BipartiteGraph graph;
    WeightMask mask;
    std::vector<std::string> dropped_voters;
    std::vector<std::string> dropped_bills;
};

// Builds the voter-bill network: voters and bills in first-appearance
// order, yea votes as edges, nay votes as observed non-edges, abstentions
// (explicit or missing records) as unobserved pairs with zero mask weight.
// Voters abstaining on more than `threshold` of the remaining bills and
// bills abstained-on by more than `threshold` of the remaining voters are
// removed in rounds until the sets stabilize.
inline VoteNetwork ingest_votes(const std::vector<VoteRecord>& records, double threshold = 0.30,
                                double gamma = 1.0) {
    if (records.empty()) throw InputError("no vote records");
    if (threshold < 0.0 || threshold > 1.0) throw InputError("threshold must lie in [0, 1]");
    std::map<std::string, Index> voter_ids, bill_ids;
    std::vector<std::string> voters, bills;
    for (const auto& rec : records) {
        if (voter_ids.emplace(rec.voter, static_cast<Index>(voter_ids.size())).second)
            voters.push_back(rec.voter);
        if (bill_ids.emplace(rec.bill, static_cast<Index>(bill_ids.size())).second)
            bills.push_back(rec.bill);
    }
    const Index nv = static_cast<Index>(voters.size());
    const Index nb = static_cast<Index>(bills.size());
    // 0 = abstain/missing, 1 = yea, 2 = nay.
    std::vector<std::vector<char>> table(nv, std::vector<char>(nb, 0));
    for (const auto& rec : records)
        table[voter_ids[rec.voter]][bill_ids[rec.bill]] = rec.vote == Vote::Yea ? 1 : rec.vote == Vote::Nay ? 2 : 0;

    std::vector<bool> voter_in(nv, true), bill_in(nb, true);
    bool changed = true;
    while (changed) {
        changed = false;
        Index nv_in = static_cast<Index>(std::count(voter_in.begin(), voter_in.end(), true));
        Index nb_in = static_cast<Index>(std::count(bill_in.begin(), bill_in.end(), true));
        if (nv_in == 0 || nb_in == 0) break;
        std::vector<bool> drop_voter(nv, false), drop_bill(nb, false);
        for (Index v = 0; v < nv; ++v) {
            if (!voter_in[v]) continue;
            Index abstains = 0;
            for (Index b = 0; b < nb; ++b)
                if (bill_in[b] && table[v][b] == 0) ++abstains;
            if (static_cast<double>(abstains) > threshold * static_cast<double>(nb_in)) drop_voter[v] = true;
        }
        for (Index b = 0; b < nb; ++b) {
            if (!bill_in[b]) continue;
            Index abstains = 0;
            for (Index v = 0; v < nv; ++v)
                if (voter_in[v] && table[v][b] == 0) ++abstains;
            if (static_cast<double>(abstains) > threshold * static_cast<double>(nv_in)) drop_bill[b] = true;
        }
        for (Index v = 0; v < nv; ++v) {
            if (drop_voter[v]) {
                voter_in[v] = false;
                changed = true;
            }
        }
        for (Index b = 0; b < nb; ++b) {
            if (drop_bill[b]) {
                bill_in[b] = false;
                changed = true;
            }
        }
    }

    std::vector<std::string> kept_voters, kept_bills, dropped_voters, dropped_bills;
    std::vector<Index> voter_pos(nv, -1), bill_pos(nb, -1);
    for (Index v = 0; v < nv; ++v) {
        if (voter_in[v]) {
            voter_pos[v] = static_cast<Index>(kept_voters.size());
            kept_voters.push_back(voters[v]);
        } else {
            dropped_voters.push_back(voters[v]);
        }
    }
    for (Index b = 0; b < nb; ++b) {
        if (bill_in[b]) {
            bill_pos[b] = static_cast<Index>(kept_bills.size());
            kept_bills.push_back(bills[b]);
        } else {
            dropped_bills.push_back(bills[b]);
        }
    }
    if (kept_voters.empty() || kept_bills.empty())
        throw InputError("vote filtering removed every voter or bill");

    const Index nd = static_cast<Index>(kept_voters.size());
    const Index ng = static_cast<Index>(kept_bills.size());
    std::vector<BipartiteGraph::Edge> edges;
    Matrix l = Matrix::Zero(nd + ng, nd + ng);
    for (Index v = 0; v < nv; ++v) {
        if (!voter_in[v]) continue;
        for (Index b = 0; b < nb; ++b) {
            if (!bill_in[b]) continue;
            if (table[v][b] == 1) edges.emplace_back(voter_pos[v], bill_pos[b]);
            if (table[v][b] != 0) {
                l(voter_pos[v], nd + bill_pos[b]) = gamma;
                l(nd + bill_pos[b], voter_pos[v]) = gamma;
            }
        }
    }
    BipartiteGraph graph(nd, ng, std::move(edges), std::move(kept_voters), std::move(kept_bills));
    return {std::move(graph), WeightMask(std::move(l), gamma), std::move(dropped_voters),
            std::move(dropped_bills)};
}

// Prior constraint file: lines `e id1 id2` (existence) or `a id1 id2`
// (absence) referencing node labels of the accompanying graph.
inline PriorConstraints parse_priors(const std::string& text, const BipartiteGraph& graph,
                                     double gamma) {
    std::map<std::string, Index> ids;
    for (Index v = 0; v < graph.n(); ++v) {
        if (!ids.emplace(graph.label(v), v).second)
            throw InputError("graph labels are not unique; cannot resolve prior constraints");
    }
    std::vector<PriorConstraints::Pair> existence, absence;
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string body = detail::trim(line);
        if (body.empty() || body[0] == '#') continue;
        const std::vector<std::string> tokens = detail::split_ws(body);
        if (tokens.size() != 3 || (tokens[0] != "e" && tokens[0] != "a"))
            throw ParseError("expected 'e|a <id1> <id2>'", line_no);
        const auto a = ids.find(tokens[1]);
        const auto b = ids.find(tokens[2]);
        if (a == ids.end()) throw ParseError("unknown node id '" + tokens[1] + "'", line_no);
        if (b == ids.end()) throw ParseError("unknown node id '" + tokens[2] + "'", line_no);
        (tokens[0] == "e" ? existence : absence).emplace_back(a->second, b->second);
    }
    PriorConstraints priors(std::move(existence), std::move(absence), gamma);
    priors.validate_for(graph.n_delta(), graph.n());
    return priors;
}

inline std::string write_priors(const PriorConstraints& priors, const BipartiteGraph& graph) {
    std::ostringstream out;
    out << "# prior constraints: e|a node_id node_id\n";
    for (const auto& [a, b] : priors.existence()) out << "e " << graph.label(a) << ' ' << graph.label(b) << '\n';
    for (const auto& [a, b] : priors.absence()) out << "a " << graph.label(a) << ' ' << graph.label(b) << '\n';
    return out.str();
}

}  // namespace wsbmf

#endif  // WSBMF_IO_HPP
