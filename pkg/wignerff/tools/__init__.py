#!/usr/bin/env python3
# Copyright (c) The wignerff authors. All Rights Reserved
