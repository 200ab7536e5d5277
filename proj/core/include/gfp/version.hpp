#pragma once

#define GFP_VERSION_MAJOR 0
#define GFP_VERSION_MINOR 1
#define GFP_VERSION_PATCH 0
#define GFP_VERSION_STRING "0.1.0"
