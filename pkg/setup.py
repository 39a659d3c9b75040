#!/usr/bin/env python3

"""A setuptools based setup module.

See:
https://packaging.python.org/en/latest/distributing.html
https://github.com/pypa/sampleproject
"""

# Always prefer setuptools over distutils
from setuptools import setup
# To use a consistent encoding
from codecs import open
from os import path

here = path.abspath(path.dirname(__file__))

# Get the long description from the README file
with open(path.join(here, 'README.rst'), encoding='utf-8') as f:
    long_description = f.read()

setup(
    name='bullcolor',

    # Versions should comply with PEP440.
    version='0.1.0.dev0',

    description='Recognize, decompose, orient and optimally colour bull-reducible Berge graphs with no antihole.',
    long_description=long_description,

    license='GPLv3',

    classifiers=[
        'Development Status :: 3 - Alpha',

        'Intended Audience :: Science/Research',
        'Topic :: Scientific/Engineering :: Mathematics',

        'License :: OSI Approved :: GNU General Public License v3 (GPLv3)',

        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: 3.6',
        'Programming Language :: Python :: 3.7',
    ],

    keywords='graph coloring perfect-graphs berge bull',

    packages=['bullcolor', 'bullcolor.output', 'bullcolor.tests'],

    # List run-time dependencies here.  These will be installed by pip when
    # your project is installed.
    install_requires=[
        'lxml >= 3.5.0',
        'jinja2 >= 2.10.1',
        'networkx >= 2.5',
    ],

    # $ pip install -e .[test]
    extras_require={
        'test' : ['hypothesis >= 4.0'],
    },
    tests_require=['hypothesis >= 4.0'],

    # Output templates and their README.rst files live under resource/.
    package_data={
        'bullcolor' : ['resource/*/*'],
    },
    include_package_data=True,

    entry_points={
        'console_scripts' : [
            'bullcolor = bullcolor.__main__:main'
        ]
    },

    test_suite='bullcolor.tests.all_tests'
)
