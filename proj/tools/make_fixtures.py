#!/usr/bin/env python3
# Copyright 2026 The bayescorr Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Regenerates the JSON fixtures under fixtures/."""

import itertools
import json
import os
import sys

OUT = os.path.join(os.path.dirname(os.path.abspath(__file__)), "..", "fixtures")


def dump(name, obj):
    with open(os.path.join(OUT, name), "w") as f:
        json.dump(obj, f, indent=1)
        f.write("\n")


def profiles(radices):
    return list(itertools.product(*[range(r) for r in radices]))


def tensor(types, actions, fn):
    """Row-major payoff tensor over (type profile, action profile)."""
    return [fn(t, a) for t in profiles(types) for a in profiles(actions)]


def nonrepresentable():
    types, actions = [2, 2], [2, 2]
    game = {
        "players": 2,
        "types": [["t1", "t1'"], ["t2", "t2'"]],
        "actions": [["a1", "a1'"], ["a2", "a2'"]],
        "prior": {"kind": "product", "rows": [[0.5, 0.5], [0.5, 0.5]]},
        "payoffs": [tensor(types, actions, lambda t, a: 0.0)] * 2,
        "payoff_scope": "own-type",
    }
    table = []
    for t in profiles(types):
        for a in profiles(actions):
            if t == (1, 1):
                table.append(0.5 if a in [(0, 1), (1, 0)] else 0.0)
            else:
                table.append(0.5 if a in [(0, 0), (1, 1)] else 0.0)
    dump("nonrepresentable_game.json", game)
    dump("nonrepresentable_dist.json", {"kind": "tabular", "table": table})


def five_action():
    # Player 1: three types, actions 0..4. Player 2: one type, actions 1..4
    # (ordinals 0..3).
    types, actions = [3, 1], [5, 4]
    hi = {(4, 1), (4, 2), (1, 3), (1, 4)}
    lo = {(2, 1), (2, 3), (3, 2), (3, 4)}

    def v1(t, a):
        a1, a2 = a[0], a[1] + 1
        if t[0] == 0:
            return 0.5 if a1 == 0 else (1.0 if a1 == a2 else 0.0)
        return 0.5 if (a1, a2) in (hi if t[0] == 1 else lo) else 0.0

    def v2(t, a):
        return 1.0 if a[0] != a[1] + 1 else 0.0

    game = {
        "players": 2,
        "types": [["t", "t'", "t''"], ["only"]],
        "actions": [["0", "1", "2", "3", "4"], ["1", "2", "3", "4"]],
        "prior": {"kind": "product", "rows": [[1 / 3, 1 / 3, 1 / 3], [1.0]]},
        "payoffs": [tensor(types, actions, v1), tensor(types, actions, v2)],
        "payoff_scope": "own-type",
    }
    # Four strategy profiles (s1(t), s1(t'), s1(t'') | s2), each 1/4.
    support = [((0, 4, 2), 1), ((0, 4, 3), 2), ((0, 1, 2), 3), ((0, 1, 3), 4)]
    sigma = {"kind": "strategy",
             "support": [{"strategy": [list(s1), [s2 - 1]], "prob": 0.25}
                         for s1, s2 in support]}
    table = []
    for t in profiles(types):
        for a in profiles(actions):
            p = sum(0.25 for s1, s2 in support if s1[t[0]] == a[0] and s2 - 1 == a[1])
            table.append(p)
    dump("five_action_game.json", game)
    dump("five_action_sigma.json", sigma)
    dump("five_action_dist.json", {"kind": "tabular", "table": table})


def correlated_coarse():
    types, actions = [2, 2], [2, 2]
    v1 = {0: [[0.0, 0.0], [0.5, 0.0]], 1: [[0.0, 1.0], [1.0, 0.0]]}
    game = {
        "players": 2,
        "types": [["t1", "t1'"], ["t2", "t2'"]],
        "actions": [["a1", "a1'"], ["a2", "a2'"]],
        "prior": {"kind": "tabular", "table": [0.5, 0.0, 0.0, 0.5]},
        "payoffs": [tensor(types, actions, lambda t, a: v1[t[0]][a[0]][a[1]]),
                    tensor(types, actions, lambda t, a: 0.0)],
        "payoff_scope": "own-type",
    }
    sigma = {"kind": "strategy", "support": [
        {"strategy": [[0, 1], [0, 0]], "prob": 0.5},
        {"strategy": [[0, 0], [0, 1]], "prob": 0.5}]}
    dump("correlated_coarse_game.json", game)
    dump("correlated_coarse_sigma.json", sigma)


def first_price():
    values, bids = [1, 2], [0, 1, 2]
    types, actions = [2, 2], [3, 3]

    def winner(a):
        return 0 if a[0] >= a[1] else 1

    def val(i, ti, a):
        return float(values[ti]) if winner(a) == i else 0.0

    def pay(i, a):
        return float(bids[a[i]]) if winner(a) == i else 0.0

    scale, offset = 1 / 3, 1 / 3
    payoffs = [tensor(types, actions,
                      lambda t, a, i=i: scale * (val(i, t[i], a) - pay(i, a)) + offset)
               for i in range(2)]
    game = {
        "players": 2,
        "types": [["v1", "v2"], ["v1", "v2"]],
        "actions": [["b0", "b1", "b2"], ["b0", "b1", "b2"]],
        "prior": {"kind": "product", "rows": [[0.5, 0.5], [0.5, 0.5]]},
        "payoffs": payoffs,
        "payoff_scope": "own-type",
        "quasilinear": {
            "values": [[val(i, ti, a) for ti in range(2) for a in profiles(actions)]
                       for i in range(2)],
            "payments": [[pay(i, a) for a in profiles(actions)] for i in range(2)],
            "scale": scale,
            "offset": offset,
        },
    }
    dev = {"kind": "own-type", "actions": [[0, 1], [0, 1]]}
    dump("first_price_game.json", game)
    dump("first_price_smooth.json", {"mode": "mechanism", "lambda": 0.5, "mu": 1.0,
                                      "deviation": dev,
                                      "mu_grid": [0.5, 0.75, 1.0, 1.5, 2.0]})
    dump("first_price_not_smooth.json", {"mode": "mechanism", "lambda": 0.9, "mu": 1.0,
                                          "deviation": dev})


def coordination():
    # Two players, two types each, independent uniform types; a player is
    # paid for matching the other's action, with a type-dependent bonus.
    types, actions = [2, 2], [2, 2]

    def v(i):
        def f(t, a):
            base = 0.6 if a[0] == a[1] else 0.1
            bonus = 0.3 if a[i] == t[i] else 0.0
            return base + bonus
        return f

    game = {
        "players": 2,
        "types": [["lo", "hi"], ["lo", "hi"]],
        "actions": [["x", "y"], ["x", "y"]],
        "prior": {"kind": "product", "rows": [[0.5, 0.5], [0.3, 0.7]]},
        "payoffs": [tensor(types, actions, v(0)), tensor(types, actions, v(1))],
        "payoff_scope": "own-type",
    }
    dump("coordination_game.json", game)


def main():
    os.makedirs(OUT, exist_ok=True)
    nonrepresentable()
    five_action()
    correlated_coarse()
    first_price()
    coordination()
    return 0


if __name__ == "__main__":
    sys.exit(main())
