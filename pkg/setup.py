#!/usr/bin/env python3
# Copyright (c) The wignerff authors. All Rights Reserved
import os
import glob
from os import path
from typing import List

from setuptools import setup, find_packages

cwd = os.path.dirname(os.path.abspath(__file__))

version = '0.1.0'
try:
    if not os.getenv('RELEASE'):
        from datetime import date
        today = date.today()
        day = today.strftime("b%Y%m%d")
        version += day
except Exception:
    pass

requirements = [
    'numpy',
    'fvcore',
    'iopath',
    'pyyaml',
    'tabulate',
    'termcolor',
    'mock',
]


def wignerff_gather_files(dst_module, extension="*") -> List[str]:
    """
    Return the files under wignerff/<dst_module> to ship as package data,
    relative to that package.
    """
    root = path.join(path.dirname(path.realpath(__file__)), "wignerff", "model_zoo")
    files = glob.glob(path.join(root, dst_module, "**", extension), recursive=True)
    return [path.relpath(f, root) for f in files]


if __name__ == '__main__':
    setup(
        name="wignerff",
        version=version,
        author="The wignerff authors",
        description="Discrete Wigner functions, quantum nets and their classification over finite fields",
        long_description=open('README.md').read(),
        long_description_content_type='text/markdown',
        license='Apache-2.0',
        python_requires='>=3.7',
        install_requires=requirements,
        packages=find_packages(exclude=["tests", "tests.*"]),
        package_data={
            "wignerff.model_zoo": wignerff_gather_files("configs", "*.yaml")
            + wignerff_gather_files("golden", "*.json"),
        },
        entry_points={
            'console_scripts': [
                'wignerff = wignerff.tools.cli:cli',
            ]
        },
    )
