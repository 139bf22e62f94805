#pragma once

// Hand-checked reference data for the 4-PSK and 8-PSK systems: known-good grids,
// clusterings and constraint lists used to pin the generators and the solver.

#include <utility>
#include <vector>

#include "relaymap/types.hpp"

namespace fixtures {

using Rows = std::vector<std::vector<int>>;
using CellList = std::vector<relaymap::Cell>;
using Blocks = std::vector<CellList>;

// ---- 4-PSK squares (t = 4 unless symbols reach 4) ----

inline const Rows kL1{{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
inline const Rows kL2{{0, 1, 2, 3}, {1, 3, 0, 2}, {2, 0, 3, 1}, {3, 2, 1, 0}};
inline const Rows kL3{{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 1, 0}, {3, 2, 0, 1}};
inline const Rows kL6{{1, 2, 3, 0}, {0, 3, 2, 1}, {3, 0, 1, 2}, {2, 1, 0, 3}};
inline const Rows kL11{{3, 0, 1, 4}, {4, 1, 2, 0}, {2, 4, 0, 3}, {1, 3, 4, 2}};
inline const Rows kL12{{4, 0, 1, 2}, {3, 4, 2, 0}, {2, 1, 4, 3}, {1, 3, 0, 4}};
inline const Rows kL13{{4, 0, 1, 2}, {1, 4, 2, 3}, {0, 3, 4, 1}, {3, 2, 0, 4}};
inline const Rows kL14{{2, 0, 1, 4}, {4, 1, 2, 3}, {0, 4, 3, 1}, {3, 2, 4, 0}};
inline const Rows kL16{{0, 1, 2, 3}, {1, 3, 4, 2}, {2, 4, 1, 0}, {3, 2, 0, 4}};
inline const Rows kL18{{0, 1, 2, 3}, {2, 4, 1, 0}, {4, 0, 3, 1}, {1, 3, 4, 2}};

// Partial square forced by the constraints of the fade at gamma=1/sqrt(2), theta=pi/4
// (-1 marks an empty cell).
inline const Rows kParfil1{{-1, 0, 1, -1}, {-1, -1, 2, 0}, {2, -1, -1, 3}, {1, 3, -1, -1}};

// ---- 4-PSK clusterings C0..C9 ----

inline const std::vector<Blocks> kC{
    // C0
    {{{0, 1}, {1, 0}, {2, 3}, {3, 2}},
     {{0, 2}, {1, 3}, {2, 0}, {3, 1}},
     {{0, 3}, {3, 0}, {1, 2}, {2, 1}},
     {{0, 0}, {1, 1}, {2, 2}, {3, 3}}},
    // C1
    {{{0, 0}, {1, 3}, {2, 2}, {3, 1}},
     {{0, 1}, {1, 2}, {2, 3}, {3, 0}},
     {{0, 2}, {3, 3}, {1, 1}, {2, 0}},
     {{0, 3}, {1, 0}, {2, 1}, {3, 2}}},
    // C2
    {{{0, 0}, {2, 3}, {3, 1}},
     {{0, 1}, {1, 3}, {2, 2}},
     {{0, 2}, {1, 1}, {3, 0}},
     {{0, 3}, {1, 0}, {2, 1}, {3, 2}},
     {{1, 2}, {2, 0}, {3, 3}}},
    // C3
    {{{0, 0}, {1, 1}, {2, 2}, {3, 3}},
     {{0, 1}, {1, 3}, {3, 2}},
     {{0, 2}, {2, 1}, {3, 0}},
     {{0, 3}, {1, 2}, {2, 0}},
     {{1, 0}, {2, 3}, {3, 1}}},
    // C4
    {{{0, 0}, {1, 1}, {2, 2}, {3, 3}},
     {{0, 1}, {2, 0}, {3, 2}},
     {{0, 2}, {1, 0}, {2, 3}},
     {{0, 3}, {1, 2}, {3, 1}},
     {{1, 3}, {2, 1}, {3, 0}}},
    // C5
    {{{0, 0}, {1, 2}, {3, 1}},
     {{0, 1}, {2, 0}, {3, 3}},
     {{0, 2}, {1, 1}, {2, 3}},
     {{0, 3}, {1, 0}, {2, 1}, {3, 2}},
     {{1, 3}, {2, 2}, {3, 0}}},
    // C6
    {{{0, 0}, {1, 2}, {2, 1}},
     {{0, 1}, {1, 0}, {3, 3}},
     {{0, 2}, {1, 3}, {2, 0}, {3, 1}},
     {{0, 3}, {2, 2}, {3, 0}},
     {{1, 1}, {2, 3}, {3, 2}}},
    // C7
    {{{0, 0}, {2, 3}, {3, 2}},
     {{0, 1}, {1, 0}, {2, 2}},
     {{0, 2}, {1, 3}, {2, 0}, {3, 1}},
     {{0, 3}, {1, 1}, {3, 0}},
     {{1, 2}, {2, 1}, {3, 3}}},
    // C8
    {{{0, 0}, {1, 3}, {3, 2}},
     {{0, 1}, {1, 2}, {2, 3}, {3, 0}},
     {{0, 2}, {2, 1}, {3, 3}},
     {{0, 3}, {1, 1}, {2, 0}},
     {{1, 0}, {2, 2}, {3, 1}}},
    // C9
    {{{0, 0}, {1, 3}, {2, 1}},
     {{0, 1}, {1, 2}, {2, 3}, {3, 0}},
     {{0, 2}, {1, 0}, {3, 3}},
     {{0, 3}, {2, 2}, {3, 1}},
     {{1, 1}, {2, 0}, {3, 2}}}};

// The two admissible per-fade clustering choices for 4-PSK (indices into kC),
// keyed by (k1, k2, m): unit-circle fades have one choice.
struct FadeChoices {
    int k1, k2, m;
    std::vector<int> choices;
};

inline const std::vector<FadeChoices> kQpskTable{
    {1, 1, 0, {0}},    {1, 1, 1, {1}},    {1, 1, 2, {0}},    {1, 1, 3, {1}},
    {1, 2, 0, {2, 3}}, {2, 1, 0, {4, 5}}, {1, 2, 1, {6, 5}}, {2, 1, 1, {2, 7}},
    {1, 2, 2, {7, 8}}, {2, 1, 2, {6, 9}}, {1, 2, 3, {4, 9}}, {2, 1, 3, {3, 8}}};

// ---- 4-PSK singularity-removal constraint lists ----

inline const Blocks kQ_1_1_0{{{0, 1}, {1, 0}},
                             {{0, 2}, {1, 3}, {2, 0}, {3, 1}},
                             {{0, 3}, {3, 0}},
                             {{1, 2}, {2, 1}},
                             {{2, 3}, {3, 2}}};

inline const Blocks kQ_1_1_1{{{0, 0}, {1, 3}},
                             {{0, 1}, {1, 2}, {2, 3}, {3, 0}},
                             {{0, 2}, {3, 3}},
                             {{1, 1}, {2, 0}},
                             {{2, 2}, {3, 1}}};

inline const Blocks kQ_1_2_0{{{0, 1}, {1, 3}}, {{0, 2}, {3, 0}}, {{1, 2}, {2, 0}},
                             {{2, 3}, {3, 1}}};

inline const Blocks kQ_2_1_0{{{0, 1}, {2, 0}}, {{0, 2}, {2, 3}}, {{1, 2}, {3, 1}},
                             {{1, 3}, {3, 0}}};

// ---- 8-PSK squares ----

inline const Rows k8L3{{0, 1, 2, 3, 4, 5, 6, 7}, {5, 4, 7, 6, 1, 0, 3, 2},
                       {6, 3, 0, 5, 2, 7, 4, 1}, {7, 2, 1, 4, 3, 6, 5, 0},
                       {4, 5, 6, 7, 0, 1, 2, 3}, {1, 0, 3, 2, 5, 4, 7, 6},
                       {2, 7, 4, 1, 6, 3, 0, 5}, {3, 6, 5, 0, 7, 2, 1, 4}};

inline const Rows k8L4{{1, 2, 3, 4, 5, 6, 7, 0}, {4, 7, 6, 1, 0, 3, 2, 5},
                       {3, 0, 5, 2, 7, 4, 1, 6}, {2, 1, 4, 3, 6, 5, 0, 7},
                       {5, 6, 7, 0, 1, 2, 3, 4}, {0, 3, 2, 5, 4, 7, 6, 1},
                       {7, 4, 1, 6, 3, 0, 5, 2}, {6, 5, 0, 7, 2, 1, 4, 3}};

inline const Rows k8L5{{1, 4, 3, 2, 5, 0, 7, 6}, {2, 7, 0, 1, 6, 3, 4, 5},
                       {3, 6, 5, 4, 7, 2, 1, 0}, {4, 1, 2, 3, 0, 5, 6, 7},
                       {5, 0, 7, 6, 1, 4, 3, 2}, {6, 3, 4, 5, 2, 7, 0, 1},
                       {7, 2, 1, 0, 3, 6, 5, 4}, {0, 5, 6, 7, 4, 1, 2, 3}};

inline const Rows k8L6{{4, 0, 6, 3, 1, 5, 7, 2}, {2, 7, 0, 1, 3, 6, 5, 4},
                       {0, 4, 7, 2, 5, 1, 6, 3}, {3, 6, 4, 0, 2, 7, 1, 5},
                       {5, 1, 2, 6, 0, 4, 3, 7}, {7, 2, 1, 5, 6, 3, 4, 0},
                       {1, 5, 3, 7, 4, 0, 2, 6}, {6, 3, 5, 4, 7, 2, 0, 1}};

inline const Rows k8L7{{6, 3, 1, 5, 7, 2, 4, 0}, {0, 1, 3, 6, 5, 4, 2, 7},
                       {7, 2, 5, 1, 6, 3, 0, 4}, {4, 0, 2, 7, 1, 5, 3, 6},
                       {2, 6, 0, 4, 3, 7, 5, 1}, {1, 5, 6, 3, 4, 0, 7, 2},
                       {3, 7, 4, 0, 2, 6, 1, 5}, {5, 4, 7, 2, 0, 1, 6, 3}};

inline const Rows k8L8{{6, 0, 7, 4, 2, 1, 3, 5}, {3, 1, 2, 0, 6, 5, 7, 4},
                       {1, 3, 5, 2, 0, 6, 4, 7}, {5, 6, 1, 7, 4, 3, 0, 2},
                       {7, 5, 6, 1, 3, 4, 2, 0}, {2, 4, 3, 5, 7, 0, 6, 1},
                       {4, 2, 0, 3, 5, 7, 1, 6}, {0, 7, 4, 6, 1, 2, 5, 3}};

inline const Rows k8L9{{4, 3, 0, 6, 2, 1, 7, 5}, {1, 5, 3, 2, 4, 7, 0, 6},
                       {5, 6, 7, 1, 3, 0, 4, 2}, {3, 2, 6, 5, 0, 4, 1, 7},
                       {0, 4, 2, 7, 6, 3, 5, 1}, {6, 7, 5, 0, 1, 2, 3, 4},
                       {7, 0, 1, 4, 5, 6, 2, 3}, {2, 1, 4, 3, 7, 5, 6, 0}};

inline const Rows k8L10{{6, 0, 7, 1, 2, 4, 3, 5}, {7, 3, 4, 2, 5, 1, 6, 0},
                        {4, 2, 0, 7, 1, 6, 5, 3}, {0, 7, 1, 4, 3, 5, 2, 6},
                        {2, 4, 3, 5, 6, 0, 7, 1}, {5, 1, 6, 0, 7, 3, 4, 2},
                        {1, 6, 5, 3, 4, 2, 0, 7}, {3, 5, 2, 6, 0, 7, 1, 4}};

inline const Rows k8L11{{7, 5, 0, 1, 2, 3, 4, 6}, {0, 1, 3, 4, 5, 6, 7, 2},
                        {6, 4, 5, 7, 3, 2, 1, 0}, {4, 0, 2, 3, 1, 7, 6, 5},
                        {2, 3, 4, 6, 7, 5, 0, 1}, {5, 6, 7, 2, 0, 1, 3, 4},
                        {3, 2, 1, 0, 6, 4, 5, 7}, {1, 7, 6, 5, 4, 0, 2, 3}};


// ---- 8-PSK singularity-removal constraint lists ----

// gamma = sin(pi/8)/sin(3pi/8), theta = 0
inline const Blocks k8_1_3_0{
    {{0, 2}, {1, 7}}, {{0, 3}, {1, 6}}, {{0, 5}, {7, 2}}, {{0, 6}, {7, 1}},
    {{1, 3}, {2, 0}}, {{1, 4}, {2, 7}}, {{2, 4}, {3, 1}}, {{2, 5}, {3, 0}},
    {{3, 5}, {4, 2}}, {{3, 6}, {4, 1}}, {{4, 6}, {5, 3}}, {{4, 7}, {5, 2}},
    {{5, 0}, {6, 3}}, {{5, 7}, {6, 4}}, {{6, 0}, {7, 5}}, {{6, 1}, {7, 4}}};

// gamma = sin(pi/8)/sin(3pi/8), theta = pi/4
inline const Blocks k8_1_3_1{
    {{0, 1}, {1, 6}}, {{0, 2}, {1, 5}}, {{0, 4}, {7, 1}}, {{0, 5}, {7, 0}},
    {{1, 2}, {2, 7}}, {{1, 3}, {2, 6}}, {{2, 3}, {3, 0}}, {{2, 4}, {3, 7}},
    {{3, 4}, {4, 1}}, {{3, 5}, {4, 0}}, {{4, 5}, {5, 2}}, {{4, 6}, {5, 1}},
    {{5, 7}, {6, 2}}, {{5, 6}, {6, 3}}, {{6, 7}, {7, 4}}, {{6, 0}, {7, 3}}};

// gamma = sin(2pi/8)/sin(4pi/8), theta = 0
inline const Blocks k8_2_4_0{{{0, 3}, {2, 7}}, {{0, 5}, {6, 1}}, {{1, 4}, {3, 0}},
                             {{1, 6}, {7, 2}}, {{2, 5}, {4, 1}}, {{3, 6}, {5, 2}},
                             {{4, 7}, {6, 3}}, {{5, 0}, {7, 4}}};

// gamma = 1, theta = 0: 24 swap pairs plus the one 8-cycle chain.
inline const Blocks k8_1_1_0{
    {{0, 1}, {1, 0}}, {{0, 2}, {2, 0}}, {{0, 3}, {3, 0}}, {{0, 5}, {5, 0}},
    {{0, 6}, {6, 0}}, {{0, 7}, {7, 0}}, {{1, 2}, {2, 1}}, {{1, 3}, {3, 1}},
    {{1, 4}, {4, 1}}, {{1, 6}, {6, 1}}, {{1, 7}, {7, 1}}, {{2, 3}, {3, 2}},
    {{2, 4}, {4, 2}}, {{2, 5}, {5, 2}}, {{2, 7}, {7, 2}}, {{3, 4}, {4, 3}},
    {{3, 5}, {5, 3}}, {{3, 6}, {6, 3}}, {{4, 5}, {5, 4}}, {{4, 6}, {6, 4}},
    {{4, 7}, {7, 4}}, {{5, 6}, {6, 5}}, {{5, 7}, {7, 5}}, {{6, 7}, {7, 6}},
    {{0, 4}, {1, 5}, {2, 6}, {3, 7}, {4, 0}, {5, 1}, {6, 2}, {7, 3}}};

// ---- 8 x 4 rectangle: columns {0,2,4,6} of k8L6 ----

inline const Rows kRect84{{4, 6, 1, 7}, {2, 0, 3, 5}, {0, 7, 5, 6}, {3, 4, 2, 1},
                          {5, 2, 0, 3}, {7, 1, 6, 4}, {1, 3, 4, 2}, {6, 5, 7, 0}};

}  // namespace fixtures
