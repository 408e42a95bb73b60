#include "cllc/permutation.hpp"

#include <cctype>
#include <numeric>

namespace cllc {

Permutation::Permutation(const std::vector<int>& one_based_images) {
    const int n = static_cast<int>(one_based_images.size());
    if (n < 1) throw usage_error("permutation size must be >= 1");
    img_.assign(n, -1);
    std::vector<char> seen(n, 0);
    for (int i = 0; i < n; ++i) {
        int v = one_based_images[i];
        if (v < 1 || v > n) throw usage_error("permutation image out of range");
        if (seen[v - 1]) throw usage_error("permutation is not a bijection");
        seen[v - 1] = 1;
        img_[i] = v - 1;
    }
}

Permutation Permutation::identity(int n) {
    if (n < 1) throw usage_error("permutation size must be >= 1");
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    return Permutation(std::move(img), 0);
}

Permutation Permutation::canonical(const Partition& type) {
    if (type.n() < 1) throw usage_error("canonical permutation needs a nonempty partition");
    std::vector<int> img(type.n());
    int base = 0;
    for (int part : type.parts()) {
        for (int j = 0; j < part; ++j)
            img[base + j] = base + (j + 1) % part;
        base += part;
    }
    return Permutation(std::move(img), 0);
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i) inv[img_[i]] = static_cast<int>(i);
    return Permutation(std::move(inv), 0);
}

Permutation compose(const Permutation& a, const Permutation& b) {
    if (a.n() != b.n()) throw usage_error("compose: size mismatch");
    std::vector<int> img(a.img_.size());
    for (std::size_t i = 0; i < img.size(); ++i) img[i] = b.img_[a.img_[i]];
    return Permutation(std::move(img), 0);
}

Permutation Permutation::conjugate_by(const Permutation& sigma) const {
    return compose(compose(sigma.inverse(), *this), sigma);
}

int Permutation::cycle_count() const {
    int count = 0;
    std::vector<char> visited(img_.size(), 0);
    for (std::size_t i = 0; i < img_.size(); ++i) {
        if (visited[i]) continue;
        ++count;
        for (int j = static_cast<int>(i); !visited[j]; j = img_[j]) visited[j] = 1;
    }
    return count;
}

Partition Permutation::cycle_type() const {
    std::vector<int> lengths;
    std::vector<char> visited(img_.size(), 0);
    for (std::size_t i = 0; i < img_.size(); ++i) {
        if (visited[i]) continue;
        int len = 0;
        for (int j = static_cast<int>(i); !visited[j]; j = img_[j]) {
            visited[j] = 1;
            ++len;
        }
        lengths.push_back(len);
    }
    std::sort(lengths.rbegin(), lengths.rend());
    return Partition(std::move(lengths));
}

std::pair<int, int> Permutation::odd_even_cycle_counts() const {
    int odd = 0, even = 0;
    const Partition type = cycle_type();
    for (int len : type.parts()) {
        if (len % 2) ++odd; else ++even;
    }
    return {odd, even};
}

std::string Permutation::to_cycle_string() const {
    std::string out;
    std::vector<char> visited(img_.size(), 0);
    for (std::size_t i = 0; i < img_.size(); ++i) {
        if (visited[i] || img_[i] == static_cast<int>(i)) {
            visited[i] = 1;
            continue;
        }
        out += '(';
        bool first = true;
        for (int j = static_cast<int>(i); !visited[j]; j = img_[j]) {
            visited[j] = 1;
            if (!first) out += ' ';
            out += std::to_string(j + 1);
            first = false;
        }
        out += ')';
    }
    return out.empty() ? "()" : out;
}

std::string Permutation::to_one_line_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < img_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(img_[i] + 1);
    }
    return out + "]";
}

namespace {

int parse_letter(const std::string& text, std::size_t& i) {
    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
        throw parse_error("expected a letter (positive integer)", text, i);
    long v = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + (text[i] - '0');
        if (v > 1'000'000) throw parse_error("letter too large", text, i);
        ++i;
    }
    if (v == 0) throw parse_error("letters are 1-based", text, i - 1);
    return static_cast<int>(v);
}

void skip_ws(const std::string& text, std::size_t& i) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
}

} // namespace

Permutation Permutation::parse(const std::string& text, int n) {
    std::size_t i = 0;
    skip_ws(text, i);
    if (i < text.size() && text[i] == '[') {
        ++i;
        std::vector<int> images;
        skip_ws(text, i);
        while (i < text.size() && text[i] != ']') {
            images.push_back(parse_letter(text, i));
            skip_ws(text, i);
            if (i < text.size() && text[i] == ',') {
                ++i;
                skip_ws(text, i);
            }
        }
        if (i >= text.size()) throw parse_error("missing ']'", text, i);
        ++i;
        skip_ws(text, i);
        if (i != text.size()) throw parse_error("trailing characters", text, i);
        if (n != 0 && n != static_cast<int>(images.size()))
            throw parse_error("one-line form length disagrees with n", text, 0);
        return Permutation(images);
    }

    // Cycle notation: a sequence of parenthesized cycles.
    std::vector<std::vector<int>> cycles;
    int max_letter = n;
    while (i < text.size()) {
        if (text[i] != '(') throw parse_error("expected '('", text, i);
        ++i;
        std::vector<int> cycle;
        skip_ws(text, i);
        while (i < text.size() && text[i] != ')') {
            int v = parse_letter(text, i);
            max_letter = std::max(max_letter, v);
            cycle.push_back(v);
            skip_ws(text, i);
            if (i < text.size() && text[i] == ',') {
                ++i;
                skip_ws(text, i);
            }
        }
        if (i >= text.size()) throw parse_error("missing ')'", text, i);
        ++i;
        cycles.push_back(std::move(cycle));
        skip_ws(text, i);
    }
    if (cycles.empty()) throw parse_error("empty permutation", text, 0);
    if (max_letter < 1) throw parse_error("no letters given and n unknown", text, 0);

    std::vector<int> images(max_letter);
    std::iota(images.begin(), images.end(), 1);
    std::vector<char> used(max_letter, 0);
    for (const auto& cycle : cycles) {
        for (std::size_t k = 0; k < cycle.size(); ++k) {
            int from = cycle[k];
            int to = cycle[(k + 1) % cycle.size()];
            if (used[from - 1]) throw parse_error("letter appears twice", text, 0);
            used[from - 1] = 1;
            images[from - 1] = to;
        }
    }
    return Permutation(images);
}

Permutation random_of_type(const Partition& type, std::mt19937_64& rng) {
    const int n = type.n();
    std::vector<int> sigma(n);
    std::iota(sigma.begin(), sigma.end(), 1);
    for (int i = n - 1; i > 0; --i) {
        auto j = static_cast<int>(rng() % static_cast<std::uint64_t>(i + 1));
        std::swap(sigma[i], sigma[j]);
    }
    return Permutation::canonical(type).conjugate_by(Permutation(sigma));
}

std::vector<Permutation> enumerate_n_cycles(int n) {
    std::vector<Permutation> out;
    for_each_n_cycle(n, [&](const Permutation& p) { out.push_back(p); });
    return out;
}

} // namespace cllc
