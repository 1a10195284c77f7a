#pragma once

// Token game with Petri's firing rule: t is enabled in M iff its pre-set is
// marked and its post-set is unmarked (contact-free), and firing yields
// M' = (M \ pre(t)) u post(t).

#include <set>
#include <string>
#include <string_view>

#include "cycloid/net.hpp"

namespace cycloid {

using Marking = std::set<PlaceId>;

/// Throws DomainError if t or any place of M is not in the net.
bool enabled(const CycloidNet& net, const Marking& m, TransitionId t);

/// Throws DomainError if t is not enabled in M.
Marking fire(const CycloidNet& net, const Marking& m, TransitionId t);

/// Sorted.
std::set<TransitionId> enabled_set(const CycloidNet& net, const Marking& m);

/// Parses "F:xi,eta,B:xi,eta,...". Coordinates are reduced to their
/// canonical representative, so any member of a class names its place.
/// Throws DomainError on malformed text.
Marking parse_marking(const CycloidParams& params, std::string_view text);

/// Same syntax as parse_marking, places in sorted order.
std::string format_marking(const Marking& m);

}  // namespace cycloid
