from setuptools import setup


setup(
    name='akblocks',
    author='Alec Thomas',
    author_email='alec@swapoff.org',
    version='1.0',
    description='Blocks of Ariki-Koike algebras through charged '
                'multipartitions.',
    long_description=\
"""akblocks classifies the core blocks of Ariki-Koike algebras by their
moving vectors, decides Scopes equivalence between them, counts their simple
modules and computes v-decomposition numbers from the Fock space canonical
basis. A command line writes JSON reports and atlases of blocks.""",
    license='BSD',
    platforms=['any'],
    packages=['akblocks'],
    zip_safe=False,
    python_requires='>=3.8',
    test_suite='akblocks.test.suite',
    classifiers=['Development Status :: 3 - Alpha',
                 'Intended Audience :: Science/Research',
                 'License :: OSI Approved :: BSD License',
                 'Operating System :: OS Independent',
                 'Programming Language :: Python :: 3',
                 'Topic :: Scientific/Engineering :: Mathematics',
                 'Environment :: Console'],
    install_requires=['networkx'],
    tests_require=['hypothesis'],
    extras_require={'test': ['hypothesis']},
    entry_points={'console_scripts': ['akblocks = akblocks.cli:main']},
    )
