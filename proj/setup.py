"""Builds the pybind11 extension through the project's CMake configuration so
pip installs and direct CMake builds produce the same module."""

import os
import subprocess
import sys
from pathlib import Path

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class CMakeExtension(Extension):
    def __init__(self, name):
        super().__init__(name, sources=[])


class CMakeBuild(build_ext):
    def build_extension(self, ext):
        out = Path(self.get_ext_fullpath(ext.name)).resolve().parent
        out.mkdir(parents=True, exist_ok=True)
        source = Path(__file__).resolve().parent
        build = Path(self.build_temp).resolve()
        build.mkdir(parents=True, exist_ok=True)
        subprocess.run(
            [
                "cmake",
                str(source),
                f"-DPython3_EXECUTABLE={sys.executable}",
                "-DCMAKE_BUILD_TYPE=Release",
                "-DHERMLAB_BUILD_TESTS=OFF",
                f"-DCMAKE_LIBRARY_OUTPUT_DIRECTORY={out}",
            ],
            cwd=build,
            check=True,
        )
        subprocess.run(
            ["cmake", "--build", str(build), "--target", "hermlab_pymod",
             "-j", str(os.cpu_count() or 1)],
            check=True,
        )


setup(ext_modules=[CMakeExtension("hermlab")], cmdclass={"build_ext": CMakeBuild})
