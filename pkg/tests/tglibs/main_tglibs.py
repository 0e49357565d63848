from unittest  import TestCase
from brs_utils import (
    create_logger,
)


class Main_tglibs(TestCase):

    def setUp(self):
        self.logger = create_logger(__name__, 'ERROR')
