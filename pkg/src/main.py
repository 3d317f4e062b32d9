#!/usr/bin/env python3
# -*- coding: utf-8 -*-
import sys

from core import SUnitApplication

if __name__ == '__main__':
    # The main entry point for the application when run from the command line
    sys.exit(SUnitApplication().run(sys.argv[1:]))
