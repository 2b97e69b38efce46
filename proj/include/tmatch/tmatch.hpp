#pragma once

#include "tmatch/approx.hpp"
#include "tmatch/compress.hpp"
#include "tmatch/exact.hpp"
#include "tmatch/generator.hpp"
#include "tmatch/kernel.hpp"
#include "tmatch/link_stream.hpp"
#include "tmatch/pipeline.hpp"
#include "tmatch/reduction.hpp"
#include "tmatch/stream_io.hpp"
