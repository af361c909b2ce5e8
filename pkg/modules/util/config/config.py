from typing import Dict
from sk88_service_locator.modules.service.interfaces.factory_interface import FactoryInterface
from modules.util.data.table_data import TableData
from modules.util.managers.factories.settings_factory import SettingsFactory
from modules.util.managers.factories.table_data_factory import TableDataFactory
from modules.util.objects.settings import Settings


class UtilConfig:

    @classmethod
    def get(cls) -> Dict[str, FactoryInterface]:
        return {
            Settings.__name__: SettingsFactory(),
            TableData.__name__: TableDataFactory()
        }
