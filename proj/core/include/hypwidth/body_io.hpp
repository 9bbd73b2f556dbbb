#pragma once

#include <string>

#include "hypwidth/bodies.hpp"

// Body description files: one JSON object per body.
//
//   {"variant": "circle", "center": [0.0, 0.0], "r": 1.0}
//   {"variant": "segment", "a": [-0.3, 0.0], "b": [0.3, 0.0]}
//   {"variant": "polygon", "vertices": [[x, y], ...]}
//   {"variant": "regular-polygon", "n": 5, "r": 0.8}
//   {"variant": "reuleaux", "n": 3, "width": 1.0, "center": [0,0], "rotation": 0.0}
//   {"variant": "hypercycle-domain", "a": 0.55, "h": 0.66, "center": [0,0], "rotation": 0.0}
//   {"variant": "magic-quadrangle"}
//   {"variant": "sampled", "h_convex": true, "boundary": [[x, y], ...]}
//
// "center" and "rotation" are optional poses; coordinates are Klein-disk.

namespace hypwidth {

struct ParseError : Error { using Error::Error; };

ConvexBody parse_body_json(const std::string& text);
ConvexBody load_body_file(const std::string& path);

}  // namespace hypwidth
