from typing import Dict
from sk88_service_locator.modules.service.interfaces.factory_interface import FactoryInterface
from modules.order.data.factories.order_data_factory import OrderDataFactory
from modules.order.data.order_data import OrderData
from modules.order.managers.distribution_manager import DistributionManager
from modules.order.managers.factories.distribution_manager_factory import DistributionManagerFactory
from modules.order.managers.factories.spectrum_manager_factory import SpectrumManagerFactory
from modules.order.managers.spectrum_manager import SpectrumManager


class OrderConfig:

    @classmethod
    def get(cls) -> Dict[str, FactoryInterface]:
        return {
            SpectrumManager.__name__: SpectrumManagerFactory(),
            DistributionManager.__name__: DistributionManagerFactory(),
            OrderData.__name__: OrderDataFactory()
        }
