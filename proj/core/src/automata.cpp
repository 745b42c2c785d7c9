#include "prax/automata.hpp"

#include <algorithm>
#include <bit>
#include <queue>
#include <string>

namespace prax {

namespace {

std::vector<State> sorted_unique(std::vector<State> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

// Frontier sets as packed bit blocks.
class BitFrontier {
public:
    explicit BitFrontier(State n) : blocks_((n + 63) / 64, 0) {}

    void set(State q) { blocks_[q >> 6] |= std::uint64_t{1} << (q & 63); }
    void clear() { std::fill(blocks_.begin(), blocks_.end(), 0); }

    bool empty() const {
        for (auto b : blocks_)
            if (b != 0) return false;
        return true;
    }

    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (std::size_t i = 0; i < blocks_.size(); ++i) {
            std::uint64_t b = blocks_[i];
            while (b != 0) {
                unsigned bit = static_cast<unsigned>(std::countr_zero(b));
                fn(static_cast<State>(i * 64 + bit));
                b &= b - 1;
            }
        }
    }

    bool intersects(const std::vector<bool>& mask) const {
        bool hit = false;
        for_each([&](State q) { hit = hit || mask[q]; });
        return hit;
    }

    void swap(BitFrontier& other) { blocks_.swap(other.blocks_); }

private:
    std::vector<std::uint64_t> blocks_;
};

} // namespace

Nfa::Nfa(Symbol alphabet_size, State num_states, std::vector<State> start,
         std::vector<State> finals, std::vector<Transition> transitions)
    : alphabet_size_(alphabet_size),
      num_states_(num_states),
      start_(sorted_unique(std::move(start))),
      finals_(sorted_unique(std::move(finals))),
      transitions_(std::move(transitions)) {
    if (alphabet_size_ < 1)
        throw InputError("alphabet size must be at least 1");
    for (State q : start_)
        if (q >= num_states_)
            throw InputError("start state " + std::to_string(q) + " out of range");
    for (State q : finals_)
        if (q >= num_states_)
            throw InputError("final state " + std::to_string(q) + " out of range");
    for (const Transition& t : transitions_) {
        if (t.from >= num_states_ || t.to >= num_states_)
            throw InputError("transition endpoint out of range");
        if (t.symbol >= alphabet_size_)
            throw InputError("transition symbol " + std::to_string(t.symbol) +
                             " outside alphabet of size " + std::to_string(alphabet_size_));
    }
    std::sort(transitions_.begin(), transitions_.end());
    transitions_.erase(std::unique(transitions_.begin(), transitions_.end()),
                       transitions_.end());

    const std::size_t cells = std::size_t{num_states_} * alphabet_size_;
    post_offsets_.assign(cells + 1, 0);
    for (const Transition& t : transitions_)
        ++post_offsets_[std::size_t{t.from} * alphabet_size_ + t.symbol + 1];
    for (std::size_t i = 1; i < post_offsets_.size(); ++i)
        post_offsets_[i] += post_offsets_[i - 1];
    post_targets_.resize(transitions_.size());
    {
        std::vector<std::uint32_t> cursor(post_offsets_.begin(), post_offsets_.end() - 1);
        for (const Transition& t : transitions_)
            post_targets_[cursor[std::size_t{t.from} * alphabet_size_ + t.symbol]++] = t.to;
    }
    final_mask_.assign(num_states_, false);
    for (State q : finals_) final_mask_[q] = true;
}

std::span<const State> Nfa::post(State from, Symbol symbol) const {
    const std::size_t cell = std::size_t{from} * alphabet_size_ + symbol;
    return {post_targets_.data() + post_offsets_[cell],
            post_targets_.data() + post_offsets_[cell + 1]};
}

bool Nfa::is_start(State q) const {
    return std::binary_search(start_.begin(), start_.end(), q);
}

bool Nfa::is_final(State q) const {
    return q < final_mask_.size() && final_mask_[q];
}

bool Nfa::operator==(const Nfa& other) const {
    return alphabet_size_ == other.alphabet_size_ && num_states_ == other.num_states_ &&
           start_ == other.start_ && finals_ == other.finals_ &&
           transitions_ == other.transitions_;
}

Dfa::Dfa(Nfa nfa) : Nfa(std::move(nfa)) {
    if (start_states().size() != 1)
        throw InputError("DFA must have exactly one start state");
    const auto& ts = transitions();
    for (std::size_t i = 1; i < ts.size(); ++i)
        if (ts[i].from == ts[i - 1].from && ts[i].symbol == ts[i - 1].symbol)
            throw InputError("DFA has two transitions on state " +
                             std::to_string(ts[i].from) + ", symbol " +
                             std::to_string(ts[i].symbol));
}

Dfa::Dfa(Symbol alphabet_size, State num_states, State start,
         std::vector<State> finals, std::vector<Transition> transitions)
    : Dfa(Nfa(alphabet_size, num_states, {start}, std::move(finals),
              std::move(transitions))) {}

State Dfa::step(State from, Symbol symbol) const {
    auto targets = post(from, symbol);
    return targets.empty() ? num_states() : targets.front();
}

bool membership(const Nfa& a, const Word& w) {
    for (Symbol c : w)
        if (c >= a.alphabet_size())
            throw InputError("word symbol " + std::to_string(c) +
                             " outside alphabet of size " +
                             std::to_string(a.alphabet_size()));
    BitFrontier cur(a.num_states()), nxt(a.num_states());
    for (State q : a.start_states()) cur.set(q);
    for (Symbol c : w) {
        nxt.clear();
        cur.for_each([&](State p) {
            for (State q : a.post(p, c)) nxt.set(q);
        });
        cur.swap(nxt);
        if (cur.empty()) return false;
    }
    bool accepted = false;
    cur.for_each([&](State q) { accepted = accepted || a.is_final(q); });
    return accepted;
}

AdfaCertificate certify_acyclic(const Dfa& d) {
    const State n = d.num_states();
    std::vector<bool> reachable(n, false);
    {
        std::vector<State> stack{d.start_state()};
        reachable[d.start_state()] = true;
        while (!stack.empty()) {
            State p = stack.back();
            stack.pop_back();
            for (Symbol c = 0; c < d.alphabet_size(); ++c)
                for (State q : d.post(p, c))
                    if (!reachable[q]) {
                        reachable[q] = true;
                        stack.push_back(q);
                    }
        }
    }
    std::vector<std::uint32_t> indegree(n, 0);
    for (const Transition& t : d.transitions())
        if (reachable[t.from] && reachable[t.to]) ++indegree[t.to];

    // Kahn's algorithm; the min-heap makes the order canonical.
    std::priority_queue<State, std::vector<State>, std::greater<State>> ready;
    std::size_t reachable_count = 0;
    for (State q = 0; q < n; ++q)
        if (reachable[q]) {
            ++reachable_count;
            if (indegree[q] == 0) ready.push(q);
        }
    std::vector<State> order;
    order.reserve(reachable_count);
    while (!ready.empty()) {
        State p = ready.top();
        ready.pop();
        order.push_back(p);
        for (Symbol c = 0; c < d.alphabet_size(); ++c)
            for (State q : d.post(p, c))
                if (reachable[q] && --indegree[q] == 0) ready.push(q);
    }
    if (order.size() != reachable_count)
        throw NotAcyclicError("cycle reachable from the start state");
    return AdfaCertificate{d, std::move(order)};
}

BlockCertificate certify_block(const Nfa& a) {
    const State n = a.num_states();
    std::vector<bool> forward(n, false);
    std::vector<State> work;
    for (State q : a.start_states()) {
        forward[q] = true;
        work.push_back(q);
    }
    while (!work.empty()) {
        State p = work.back();
        work.pop_back();
        for (Symbol c = 0; c < a.alphabet_size(); ++c)
            for (State q : a.post(p, c))
                if (!forward[q]) {
                    forward[q] = true;
                    work.push_back(q);
                }
    }
    std::vector<std::vector<State>> pre(n);
    for (const Transition& t : a.transitions()) pre[t.to].push_back(t.from);
    std::vector<bool> backward(n, false);
    for (State q : a.final_states()) {
        backward[q] = true;
        work.push_back(q);
    }
    while (!work.empty()) {
        State p = work.back();
        work.pop_back();
        for (State q : pre[p])
            if (!backward[q]) {
                backward[q] = true;
                work.push_back(q);
            }
    }

    // Keep only states on some accepting path.
    std::vector<State> relabel(n, n);
    State kept = 0;
    for (State q = 0; q < n; ++q)
        if (forward[q] && backward[q]) relabel[q] = kept++;
    if (kept == 0) throw EmptyLanguageError("automaton accepts no word");

    std::vector<State> new_start, new_finals;
    std::vector<Transition> new_transitions;
    for (State q : a.start_states())
        if (relabel[q] < n) new_start.push_back(relabel[q]);
    for (State q : a.final_states())
        if (relabel[q] < n) new_finals.push_back(relabel[q]);
    for (const Transition& t : a.transitions())
        if (relabel[t.from] < n && relabel[t.to] < n)
            new_transitions.push_back({relabel[t.from], t.symbol, relabel[t.to]});
    Nfa trimmed(a.alphabet_size(), kept, std::move(new_start), std::move(new_finals),
                std::move(new_transitions));

    // BFS level assignment; any edge that does not advance the level by
    // exactly one exposes two accepting lengths.
    constexpr std::uint32_t kUnset = ~std::uint32_t{0};
    std::vector<std::uint32_t> level(kept, kUnset);
    std::queue<State> bfs;
    for (State q : trimmed.start_states()) {
        level[q] = 0;
        bfs.push(q);
    }
    while (!bfs.empty()) {
        State p = bfs.front();
        bfs.pop();
        for (Symbol c = 0; c < trimmed.alphabet_size(); ++c)
            for (State q : trimmed.post(p, c)) {
                if (level[q] == kUnset) {
                    level[q] = level[p] + 1;
                    bfs.push(q);
                } else if (level[q] != level[p] + 1) {
                    throw NotBlockError("accepted words have different lengths");
                }
            }
    }
    const auto& finals = trimmed.final_states();
    std::uint32_t word_length = level[finals.front()];
    for (State q : finals)
        if (level[q] != word_length)
            throw NotBlockError("final states at different depths");
    return BlockCertificate{std::move(trimmed), std::move(level), word_length};
}

Dfa complement_dfa(const Dfa& d) {
    const State n = d.num_states();
    bool complete = true;
    for (State q = 0; q < n && complete; ++q)
        for (Symbol c = 0; c < d.alphabet_size() && complete; ++c)
            if (d.post(q, c).empty()) complete = false;

    State total = complete ? n : n + 1;
    std::vector<Transition> transitions = d.transitions();
    if (!complete) {
        const State sink = n;
        for (State q = 0; q < n; ++q)
            for (Symbol c = 0; c < d.alphabet_size(); ++c)
                if (d.post(q, c).empty()) transitions.push_back({q, c, sink});
        for (Symbol c = 0; c < d.alphabet_size(); ++c)
            transitions.push_back({sink, c, sink});
    }
    std::vector<State> finals;
    for (State q = 0; q < total; ++q)
        if (!d.is_final(q)) finals.push_back(q);   // sink (if any) is never final in d
    return Dfa(d.alphabet_size(), total, d.start_state(), std::move(finals),
               std::move(transitions));
}

Nfa union_nfa(std::span<const Dfa> ds) {
    if (ds.empty()) throw InputError("union of zero automata");
    const Symbol s = ds.front().alphabet_size();
    State total = 0;
    for (const Dfa& d : ds) {
        if (d.alphabet_size() != s)
            throw InputError("union over mixed alphabets");
        total += d.num_states();
    }
    std::vector<State> start, finals;
    std::vector<Transition> transitions;
    State offset = 0;
    for (const Dfa& d : ds) {
        for (State q : d.start_states()) start.push_back(q + offset);
        for (State q : d.final_states()) finals.push_back(q + offset);
        for (const Transition& t : d.transitions())
            transitions.push_back({t.from + offset, t.symbol, t.to + offset});
        offset += d.num_states();
    }
    return Nfa(s, total, std::move(start), std::move(finals), std::move(transitions));
}

} // namespace prax
