#include "nakarig/gen_cogen.hpp"

#include <charconv>
#include <sstream>

#include "json.hpp"
#include "nakarig/errors.hpp"

namespace nakarig {

namespace {

template <typename T>
bool parse_whole(std::string_view text, T& out) {
    const char* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, out);
    return ec == std::errc{} && ptr == end && !text.empty();
}

} // namespace

int stable_index(const Vertex& canonical, const AlgebraParams& a) {
    return (canonical.t - 1) * a.n + static_cast<int>(canonical.x);
}

Vertex stable_vertex(int index, const AlgebraParams& a) { return Vertex{index % a.n, index / a.n + 1}; }

GenCogenSet::GenCogenSet(AlgebraParams params)
    : params_{params}, bits_(static_cast<std::size_t>(params.stable_count()), false) {}

GenCogenSet::GenCogenSet(AlgebraParams params, std::span<const Vertex> vertices) : GenCogenSet(params) {
    for (const Vertex& v : vertices) {
        if (!v.is_stable(params_)) {
            throw DomainError("GenCogenSet: vertex " + to_string(v) + " is not stable");
        }
        insert(v);
    }
}

GenCogenSet GenCogenSet::auslander(AlgebraParams params) {
    GenCogenSet s(params);
    s.bits_.assign(s.bits_.size(), true);
    return s;
}

GenCogenSet GenCogenSet::from_mask(AlgebraParams params, std::uint64_t mask) {
    if (params.stable_count() > 64) {
        throw ContractViolation("GenCogenSet::from_mask needs n(m-1) <= 64");
    }
    GenCogenSet s(params);
    for (int i = 0; i < params.stable_count(); ++i) {
        s.bits_[static_cast<std::size_t>(i)] = ((mask >> i) & 1U) != 0;
    }
    return s;
}

bool GenCogenSet::contains(const Vertex& v) const {
    if (v.t == 0 || v.t == params_.m) {
        return true;
    }
    if (v.t < 0 || v.t > params_.m) {
        return false;
    }
    return bits_[static_cast<std::size_t>(stable_index(canonicalize(v, params_), params_))];
}

void GenCogenSet::insert(const Vertex& v) {
    if (v.is_stable(params_)) {
        bits_[static_cast<std::size_t>(stable_index(canonicalize(v, params_), params_))] = true;
    }
}

void GenCogenSet::erase(const Vertex& v) {
    if (v.is_stable(params_)) {
        bits_[static_cast<std::size_t>(stable_index(canonicalize(v, params_), params_))] = false;
    }
}

std::vector<Vertex> GenCogenSet::members() const {
    std::vector<Vertex> out;
    for (int x = 0; x < params_.n; ++x) {
        for (int t = 1; t < params_.m; ++t) {
            if (bits_[static_cast<std::size_t>(stable_index(Vertex{x, t}, params_))]) {
                out.push_back(Vertex{x, t});
            }
        }
    }
    return out;
}

int GenCogenSet::member_count() const {
    int c = 0;
    for (bool b : bits_) {
        c += b ? 1 : 0;
    }
    return c;
}

std::string to_json(const GenCogenSet& s) {
    nlohmann::ordered_json doc;
    doc["n"] = s.params().n;
    doc["m"] = s.params().m;
    auto members = nlohmann::ordered_json::array();
    for (const Vertex& v : s.members()) {
        members.push_back({v.x, v.t});
    }
    doc["members"] = std::move(members);
    return doc.dump();
}

GenCogenSet gen_cogen_from_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw DomainError(std::string{"gen_cogen_from_json: "} + e.what());
    }
    try {
        const AlgebraParams a = AlgebraParams::make(doc.at("n").get<int>(), doc.at("m").get<int>());
        std::vector<Vertex> vs;
        for (const auto& pair : doc.at("members")) {
            if (!pair.is_array() || pair.size() != 2) {
                throw DomainError("gen_cogen_from_json: members must be [x, t] pairs");
            }
            vs.push_back(Vertex{pair[0].get<std::int64_t>(), pair[1].get<int>()});
        }
        return GenCogenSet(a, vs);
    } catch (const nlohmann::json::exception& e) {
        throw DomainError(std::string{"gen_cogen_from_json: "} + e.what());
    }
}

GenCogenSet parse_members(std::string_view spec, const AlgebraParams& a) {
    std::vector<Vertex> vs;
    std::size_t pos = 0;
    while (pos < spec.size()) {
        std::size_t comma = spec.find(',', pos);
        if (comma == std::string_view::npos) {
            comma = spec.size();
        }
        const std::string_view item = spec.substr(pos, comma - pos);
        const std::size_t colon = item.find(':');
        std::int64_t x = 0;
        int t = 0;
        const bool ok = colon != std::string_view::npos && parse_whole(item.substr(0, colon), x) &&
                        parse_whole(item.substr(colon + 1), t);
        if (!ok) {
            throw DomainError("parse_members: expected x:t, got '" + std::string{item} + "'");
        }
        vs.push_back(Vertex{x, t});
        pos = comma + 1;
    }
    return GenCogenSet(a, vs);
}

} // namespace nakarig
