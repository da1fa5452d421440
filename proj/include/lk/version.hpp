#pragma once

#define LK_VERSION "0.1.0"
