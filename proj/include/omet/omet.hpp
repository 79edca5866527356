#pragma once

#include "omet/adversary_l2.hpp"
#include "omet/adversary_linf.hpp"
#include "omet/adversary_tree.hpp"
#include "omet/baselines.hpp"
#include "omet/duel.hpp"
#include "omet/generators.hpp"
#include "omet/greedy_tree.hpp"
#include "omet/host.hpp"
#include "omet/json_io.hpp"
#include "omet/line_embed.hpp"
#include "omet/linf_embed.hpp"
#include "omet/metric.hpp"
#include "omet/series_parallel.hpp"
#include "omet/steiner_tree.hpp"
#include "omet/transcript.hpp"
#include "omet/verify.hpp"
#include "omet/weighted_tree.hpp"
