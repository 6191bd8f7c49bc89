#!/usr/bin/env python3
# Copyright (c) The wignerff authors. All Rights Reserved


from wignerff.setup import setup_loggers

setup_loggers(output_dir=None)
