
import os

from setuptools import setup, find_packages

# Try to load the version from a datafile in the package
package_version = "1.0.0.dev0"
package_version_path = os.path.join(os.path.dirname(__file__), 'graphbench_core', 'VERSION')
if os.path.exists(package_version_path):
    with open(package_version_path) as package_version_file:
        package_version = package_version_file.read().strip()

# read the contents of your README file
this_directory = os.path.abspath(os.path.dirname(__file__))
with open(os.path.join(this_directory, 'README.md'), encoding='utf-8') as f:
    long_description = f.read()

setup(
    name="graphbench-core",
    version=package_version,
    description="Combinatorial graph workbench - invariants, enumeration and claim verification",
    long_description=long_description,
    long_description_content_type='text/markdown',
    license="MIT",
    classifiers=[
        'Development Status :: 2 - Pre-Alpha',
        'Intended Audience :: Science/Research',
        'Topic :: Scientific/Engineering :: Mathematics',
        'License :: OSI Approved :: MIT License',
        'Programming Language :: Python :: 3.7',
        'Programming Language :: Python :: 3.8',
    ],
    keywords="graph theory zagreb sombor spectral moments trees matching competition number markov chain",
    packages=find_packages(exclude=['test/*']),
    install_requires=[
        'assemblyline',
        'numpy',
        'networkx',
        'pyyaml',
    ],
    extras_require={
        'test': [
            'pytest',
            'pytest-cov',
        ]
    },
    tests_require=[
        'pytest',
        'pytest-cov',
    ],
    entry_points={
        'console_scripts': [
            'graphbench = graphbench_core.run_workbench:main',
        ]
    },
    package_data={
        '': ["VERSION"]
    }
)
