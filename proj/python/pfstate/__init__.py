# Copyright 2026 pfstate developers
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Gaussian fermionic pure states with Pfaffian amplitudes.

The heavy lifting lives in the compiled extension ``_pfstate``; this package
re-exports its public surface. Installed wheels carry the extension inside
the package; development builds may leave it on ``sys.path`` instead.
"""

try:
    from . import _pfstate as _core
except ImportError:  # development build: extension on sys.path
    import _pfstate as _core

__all__ = []
for _name in dir(_core):
    if not _name.startswith("_"):
        globals()[_name] = getattr(_core, _name)
        __all__.append(_name)

__version__ = "0.1.0"
