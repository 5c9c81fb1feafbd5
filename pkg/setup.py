"""Build hook for the optional compiled search kernels.

The package works without the extension (a pure-Python twin is selected at
import time), so a failed compile must not break installation.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("MATCHGAME_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "matchgame._speed",
                    ["src/matchgame/_speed.pyx"],
                    language="c++",
                )
            ],
            language_level=3,
        )
    except Exception as exc:  # pragma: no cover - build-env dependent
        print(f"matchgame: skipping compiled kernels ({exc})")

setup(ext_modules=ext_modules)
