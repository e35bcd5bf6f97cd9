"""Build hook that compiles the Rust arithmetic backend with cargo.

The backend crate lives in rust/ and is emitted as the extension module
storaudit._backend. Requires a Rust toolchain; run
`pip install -e . --no-build-isolation` (or `python setup.py build_ext
--inplace`) to (re)build it.
"""

import shutil
import subprocess
from pathlib import Path

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext

ROOT = Path(__file__).parent.resolve()


class CargoExtension(Extension):
    def __init__(self, name: str, crate_dir: str):
        super().__init__(name, sources=[])
        self.crate_dir = crate_dir


class CargoBuildExt(build_ext):
    def build_extension(self, ext):
        if not isinstance(ext, CargoExtension):
            return super().build_extension(ext)
        crate = ROOT / ext.crate_dir
        subprocess.run(["cargo", "build", "--release"], cwd=crate, check=True)
        built = crate / "target" / "release" / "lib_backend.so"
        dest = Path(self.get_ext_fullpath(ext.name))
        dest.parent.mkdir(parents=True, exist_ok=True)
        shutil.copyfile(built, dest)


setup(
    ext_modules=[CargoExtension("storaudit._backend", "rust")],
    cmdclass={"build_ext": CargoBuildExt},
)
