#!/usr/bin/env python
# -*- coding: utf-8 -*-

from edutree.cli import main

if __name__ == "__main__":
    main()
