#!/usr/bin/env python3
# Copyright (c) The wignerff authors. All Rights Reserved

__version__ = "0.1.0"
