#!/usr/bin/env python3
# encoding=utf-8
import sys

from setuptools import setup

# bitsets rely on int.bit_count
if sys.version_info < (3, 10):
    sys.exit('troman requires Python 3.10 or newer')

if __name__ == '__main__':
    setup()
